#pragma once

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "lig/core/params.hpp"
#include "lig/core/types.hpp"
#include "lig/geometry/field.hpp"

namespace lig::geometry {

struct Line {
  LineId id = 0;
  std::vector<PointId> points;  // sorted
  PointId basis[2] = {0, 0};
};

struct BuildOptions {
  std::size_t max_lines = 2000;
};

/// A finite PG(n,q) or AG(n,q) over a prime field. Immutable once built.
class Space {
 public:
  static Space build(SpaceKind kind, unsigned n, unsigned q, const BuildOptions& opt = {});

  const SpaceParams& params() const noexcept { return params_; }
  const FieldPrime& field() const noexcept { return field_; }

  std::size_t point_count() const noexcept { return point_count_; }
  std::size_t line_count() const noexcept { return lines_.size(); }

  const Line& line(LineId id) const;
  const std::vector<LineId>& lines_through(PointId p) const;
  /// The unique line through two distinct points.
  LineId join(PointId a, PointId b) const;
  bool incident(PointId p, LineId l) const;

  /// Point coordinates: projective points normalized (first nonzero = 1,
  /// length n+1), affine points plain vectors of length n.
  std::span<const Elem> coords(PointId p) const;
  /// Homogeneous representative of length n+1; affine points become (1, x).
  std::span<const Elem> hvec(PointId p) const;

  /// Number of coordinate reads since construction; the purity audit watches it.
  std::uint64_t coordinate_reads() const noexcept { return coord_reads_.load(std::memory_order_relaxed); }

  Space(const Space& other);
  Space(Space&&) noexcept;
  Space& operator=(Space&&) noexcept;

 private:
  Space(SpaceParams params, FieldPrime field) : params_(params), field_(std::move(field)) {}
  void check_point(PointId p) const;

  SpaceParams params_;
  FieldPrime field_;
  std::size_t point_count_ = 0;
  std::size_t dim_ = 0;  // coordinate length
  std::vector<Elem> coords_;
  std::vector<Elem> hcoords_;
  std::vector<Line> lines_;
  std::vector<std::vector<LineId>> point_lines_;
  std::vector<LineId> join_;  // point_count^2
  mutable std::atomic<std::uint64_t> coord_reads_{0};
};

std::uint64_t expected_line_count(SpaceKind kind, unsigned n, unsigned q);
std::uint64_t expected_point_count(SpaceKind kind, unsigned n, unsigned q);

}  // namespace lig::geometry
