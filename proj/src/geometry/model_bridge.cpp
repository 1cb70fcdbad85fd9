#include "lig/geometry/model_bridge.hpp"

namespace lig::geometry {

IntersectionModel model_from_space(const Space& s) {
  const std::size_t L = s.line_count();
  const std::size_t W = words_for(L);
  std::vector<Word> rows(L * W, 0);
  // Two distinct lines meet iff they share a point; walk the pencils.
  for (PointId p = 0; p < s.point_count(); ++p) {
    const auto& through = s.lines_through(p);
    for (LineId a : through)
      for (LineId b : through)
        if (a != b) rows[a * W + (b >> 6)] |= Word{1} << (b & 63);
  }
  return IntersectionModel(s.params(), L, std::move(rows));
}

}  // namespace lig::geometry
