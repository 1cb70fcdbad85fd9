#include "lig/geometry/oracles.hpp"

#include <algorithm>

namespace lig::geometry {

const char* to_string(MeetResult::Tag t) {
  switch (t) {
    case MeetResult::Tag::Equal: return "Equal";
    case MeetResult::Tag::Point: return "Point";
    case MeetResult::Tag::Skew: return "Skew";
    case MeetResult::Tag::Parallel: return "Parallel";
  }
  return "?";
}

const char* to_string(TripleClass c) {
  switch (c) {
    case TripleClass::Triangle: return "Triangle";
    case TripleClass::ConcurrentNonCoplanar: return "ConcurrentNonCoplanar";
    case TripleClass::ConcurrentCoplanar: return "ConcurrentCoplanar";
    case TripleClass::NotPairwiseMeeting: return "NotPairwiseMeeting";
    case TripleClass::Degenerate: return "Degenerate";
  }
  return "?";
}

MeetResult meet(const Space& s, LineId a, LineId b) {
  const Line& la = s.line(a);
  const Line& lb = s.line(b);
  if (a == b) return {MeetResult::Tag::Equal, kNoPoint};
  PointId common = kNoPoint;
  std::size_t i = 0, j = 0;
  while (i < la.points.size() && j < lb.points.size()) {
    if (la.points[i] < lb.points[j])
      ++i;
    else if (la.points[i] > lb.points[j])
      ++j;
    else {
      common = la.points[i];
      break;
    }
  }
  if (common != kNoPoint) return {MeetResult::Tag::Point, common};
  if (s.params().affine() && Subspace::of_lines(s, {a, b}).dim() == 2) return {MeetResult::Tag::Parallel, kNoPoint};
  return {MeetResult::Tag::Skew, kNoPoint};
}

bool oracle_disjoint(const Space& s, LineId a, LineId b) {
  const auto t = meet(s, a, b).tag;
  return t == MeetResult::Tag::Skew || t == MeetResult::Tag::Parallel;
}

bool oracle_skew(const Space& s, LineId a, LineId b) { return meet(s, a, b).tag == MeetResult::Tag::Skew; }

bool oracle_concurrent(const Space& s, LineId a, LineId b, LineId c) {
  if (a == b || b == c || a == c) return false;
  const MeetResult m = meet(s, a, b);
  return m.is_point() && s.incident(m.point, c);
}

bool oracle_in_pencil(const Space& s, LineId a, LineId b, LineId c) {
  const MeetResult m = meet(s, a, b);
  if (!m.is_point()) {
    s.line(c);
    return false;
  }
  return s.incident(m.point, c);
}

bool oracle_meet_diff(const Space& s, LineId a1, LineId b1, LineId a2, LineId b2) {
  const MeetResult m1 = meet(s, a1, b1);
  const MeetResult m2 = meet(s, a2, b2);
  return m1.is_point() && m2.is_point() && m1.point != m2.point;
}

bool oracle_coplanar(const Space& s, LineId a, LineId b) { return Subspace::of_lines(s, {a, b}).dim() <= 2; }

TripleClass oracle_classify3(const Space& s, LineId a, LineId b, LineId c) {
  s.line(a);
  s.line(b);
  s.line(c);
  if (a == b || b == c || a == c) return TripleClass::Degenerate;
  const MeetResult ab = meet(s, a, b), bc = meet(s, b, c), ca = meet(s, c, a);
  if (!ab.is_point() || !bc.is_point() || !ca.is_point()) return TripleClass::NotPairwiseMeeting;
  if (ab.point != bc.point) return TripleClass::Triangle;
  return Subspace::of_lines(s, {a, b, c}).dim() == 2 ? TripleClass::ConcurrentCoplanar
                                                     : TripleClass::ConcurrentNonCoplanar;
}

bool oracle_t(const Space& s, LineId a, LineId b, LineId c) {
  const TripleClass k = oracle_classify3(s, a, b, c);
  return k == TripleClass::Triangle || k == TripleClass::ConcurrentNonCoplanar;
}

unsigned oracle_span_dim(const Space& s, const std::vector<LineId>& lines) {
  if (lines.empty()) throw Error(ErrorCode::EmptyList, "span of an empty line list");
  return static_cast<unsigned>(Subspace::of_lines(s, lines).dim());
}

PointId oracle_tripod_vertex(const Space& s, LineId a, LineId b, LineId c) {
  if (oracle_classify3(s, a, b, c) != TripleClass::ConcurrentNonCoplanar)
    throw Error(ErrorCode::WrongClass, "triple is not concurrent non-coplanar");
  return meet(s, a, b).point;
}

Subspace oracle_trilateral_plane(const Space& s, LineId a, LineId b, LineId c) {
  if (oracle_classify3(s, a, b, c) != TripleClass::Triangle)
    throw Error(ErrorCode::WrongClass, "triple is not a triangle");
  return Subspace::of_lines(s, {a, b, c});
}

namespace {

enum class Kind { Triangle, Tripod, Other };

Kind kind_of(const Space& s, const LineId t[3]) {
  switch (oracle_classify3(s, t[0], t[1], t[2])) {
    case TripleClass::Triangle: return Kind::Triangle;
    case TripleClass::ConcurrentNonCoplanar: return Kind::Tripod;
    default: return Kind::Other;
  }
}

}  // namespace

bool oracle_equiv_plus(const Space& s, const LineId t1[3], const LineId t2[3]) {
  const Kind k1 = kind_of(s, t1), k2 = kind_of(s, t2);
  return k1 != Kind::Other && k1 == k2;
}

bool oracle_equiv_minus(const Space& s, const LineId t1[3], const LineId t2[3]) {
  const Kind k1 = kind_of(s, t1), k2 = kind_of(s, t2);
  return k1 != Kind::Other && k2 != Kind::Other && k1 != k2;
}

bool oracle_equiv_oplus(const Space& s, const LineId t1[3], const LineId t2[3]) {
  const Kind k1 = kind_of(s, t1), k2 = kind_of(s, t2);
  if (k1 == Kind::Other || k1 != k2) return false;
  if (k1 == Kind::Tripod)
    return oracle_tripod_vertex(s, t1[0], t1[1], t1[2]) != oracle_tripod_vertex(s, t2[0], t2[1], t2[2]);
  return !(oracle_trilateral_plane(s, t1[0], t1[1], t1[2]) == oracle_trilateral_plane(s, t2[0], t2[1], t2[2]));
}

}  // namespace lig::geometry
