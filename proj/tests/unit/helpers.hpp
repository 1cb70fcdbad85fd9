#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "doctest.h"
#include "lig/geometry/oracles.hpp"
#include "lig/geometry/space.hpp"

namespace lig::test {

using geometry::Space;

inline Space pg(unsigned n, unsigned q) { return Space::build(SpaceKind::Projective, n, q); }
inline Space ag(unsigned n, unsigned q) { return Space::build(SpaceKind::Affine, n, q); }

inline PointId point_at(const Space& s, std::vector<unsigned> c) {
  for (PointId p = 0; p < s.point_count(); ++p) {
    const auto v = s.coords(p);
    if (v.size() == c.size() && std::equal(v.begin(), v.end(), c.begin())) return p;
  }
  FAIL("no point with these coordinates");
  return kNoPoint;
}

// first pair (a<b) satisfying pred
inline std::pair<LineId, LineId> find_pair(const Space& s, const std::function<bool(LineId, LineId)>& pred) {
  const auto L = static_cast<LineId>(s.line_count());
  for (LineId a = 0; a < L; ++a)
    for (LineId b = a + 1; b < L; ++b)
      if (pred(a, b)) return {a, b};
  FAIL("no pair found");
  return {0, 0};
}

inline std::array<LineId, 3> find_triple(const Space& s, geometry::TripleClass want) {
  const auto L = static_cast<LineId>(s.line_count());
  for (LineId a = 0; a < L; ++a)
    for (LineId b = a + 1; b < L; ++b)
      for (LineId c = b + 1; c < L; ++c)
        if (geometry::oracle_classify3(s, a, b, c) == want) return {a, b, c};
  FAIL("no triple of this class");
  return {0, 0, 0};
}

inline bool is_meet(const Space& s, LineId a, LineId b) { return geometry::meet(s, a, b).is_point(); }
inline bool is_skew(const Space& s, LineId a, LineId b) { return geometry::oracle_skew(s, a, b); }
inline bool is_parallel(const Space& s, LineId a, LineId b) {
  return geometry::meet(s, a, b).tag == geometry::MeetResult::Tag::Parallel;
}

template <class F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::Usage;
}

}  // namespace lig::test
