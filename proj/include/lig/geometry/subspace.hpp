#pragma once

#include <vector>

#include "lig/geometry/space.hpp"

namespace lig::geometry {

/// A subspace of a Space given by a spanning set of homogeneous vectors,
/// kept in reduced row echelon form. Projective dimension is rank - 1; for
/// affine spaces this is the dimension of the affine hull.
class Subspace {
 public:
  static Subspace of_points(const Space& s, const std::vector<PointId>& pts);
  static Subspace of_lines(const Space& s, const std::vector<LineId>& lines);

  int dim() const { return static_cast<int>(rank_) - 1; }
  unsigned rank() const { return rank_; }

  bool contains(PointId p) const;
  bool contains_line(LineId l) const;
  /// Sorted ids of all points of the space lying in this subspace.
  std::vector<PointId> points() const;
  /// Sorted ids of all lines contained in this subspace.
  std::vector<LineId> lines() const;

  Subspace join(const Subspace& other) const;
  void add_point(PointId p);

  bool operator==(const Subspace& o) const;

 private:
  explicit Subspace(const Space& s) : space_(&s) {}
  void insert(std::span<const Elem> v);

  const Space* space_;
  std::vector<Elem> rows_;  // rank_ rows of length n+1, RREF
  unsigned rank_ = 0;
};

}  // namespace lig::geometry
