#pragma once

#include <iosfwd>

#include "lig/geometry/space.hpp"

namespace lig::geometry {

// Header `space <kind> n=<n> q=<q> points=<P> lines=<L>`, then one
// `<line-id>: <point-id> ...` row per line.
void export_space(const Space& s, std::ostream& out);

}  // namespace lig::geometry
