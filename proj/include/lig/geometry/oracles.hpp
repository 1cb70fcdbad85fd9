#pragma once

// Coordinate-based ground truth for every notion the defined predicates
// are meant to capture.

#include <vector>

#include "lig/geometry/space.hpp"
#include "lig/geometry/subspace.hpp"

namespace lig::geometry {

struct MeetResult {
  enum class Tag { Equal, Point, Skew, Parallel };
  Tag tag = Tag::Skew;
  PointId point = kNoPoint;

  bool is_point() const { return tag == Tag::Point; }
  bool operator==(const MeetResult&) const = default;
};

enum class TripleClass { Triangle, ConcurrentNonCoplanar, ConcurrentCoplanar, NotPairwiseMeeting, Degenerate };

const char* to_string(MeetResult::Tag t);
const char* to_string(TripleClass c);

MeetResult meet(const Space& s, LineId a, LineId b);

/// Distinct lines with no common point (skew or parallel).
bool oracle_disjoint(const Space& s, LineId a, LineId b);
/// Distinct, disjoint and not coplanar.
bool oracle_skew(const Space& s, LineId a, LineId b);

bool oracle_concurrent(const Space& s, LineId a, LineId b, LineId c);
/// c passes through the meet point of a and b.
bool oracle_in_pencil(const Space& s, LineId a, LineId b, LineId c);
bool oracle_meet_diff(const Space& s, LineId a1, LineId b1, LineId a2, LineId b2);
bool oracle_coplanar(const Space& s, LineId a, LineId b);
TripleClass oracle_classify3(const Space& s, LineId a, LineId b, LineId c);
/// Triangle or concurrent non-coplanar: the semantic side of T.
bool oracle_t(const Space& s, LineId a, LineId b, LineId c);
unsigned oracle_span_dim(const Space& s, const std::vector<LineId>& lines);

/// Vertex of a concurrent non-coplanar triple; throws WrongClass otherwise.
PointId oracle_tripod_vertex(const Space& s, LineId a, LineId b, LineId c);
/// Carrier plane of a triangle; throws WrongClass otherwise.
Subspace oracle_trilateral_plane(const Space& s, LineId a, LineId b, LineId c);

/// Semantic sides of the six-place 3D predicates.
bool oracle_equiv_plus(const Space& s, const LineId t1[3], const LineId t2[3]);
bool oracle_equiv_minus(const Space& s, const LineId t1[3], const LineId t2[3]);
bool oracle_equiv_oplus(const Space& s, const LineId t1[3], const LineId t2[3]);

}  // namespace lig::geometry
