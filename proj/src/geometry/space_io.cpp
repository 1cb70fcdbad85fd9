#include "lig/geometry/space_io.hpp"

#include <ostream>

namespace lig::geometry {

void export_space(const Space& s, std::ostream& out) {
  const auto& p = s.params();
  out << "space " << to_string(p.kind) << " n=" << p.n << " q=" << p.q << " points=" << s.point_count()
      << " lines=" << s.line_count() << "\n";
  for (LineId l = 0; l < s.line_count(); ++l) {
    out << l << ":";
    for (PointId pt : s.line(l).points) out << ' ' << pt;
    out << "\n";
  }
}

}  // namespace lig::geometry
