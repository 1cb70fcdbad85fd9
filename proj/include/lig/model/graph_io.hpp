#pragma once

#include <iosfwd>

#include "lig/model/intersection_model.hpp"

namespace lig {

// Text format:
//   model <projective|affine> n=<n> q=<q> lines=<L>
//   adj <id>: <neighbour ids ascending>
// one adj line per line id, in order.

void export_graph(const IntersectionModel& model, std::ostream& out);
IntersectionModel import_graph(std::istream& in);

}  // namespace lig
