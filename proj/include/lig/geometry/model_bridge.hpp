#pragma once

#include "lig/geometry/space.hpp"
#include "lig/model/intersection_model.hpp"

namespace lig::geometry {

/// Adjacency bit (a,b) set iff the two lines share exactly one point.
/// The result keeps no coordinates.
IntersectionModel model_from_space(const Space& s);

}  // namespace lig::geometry
