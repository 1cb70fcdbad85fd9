#include "lig/geometry/subspace.hpp"

#include <algorithm>

namespace lig::geometry {

Subspace Subspace::of_points(const Space& s, const std::vector<PointId>& pts) {
  Subspace u(s);
  for (PointId p : pts) u.add_point(p);
  return u;
}

Subspace Subspace::of_lines(const Space& s, const std::vector<LineId>& lines) {
  Subspace u(s);
  for (LineId l : lines) {
    const Line& ln = s.line(l);
    u.add_point(ln.basis[0]);
    u.add_point(ln.basis[1]);
  }
  return u;
}

void Subspace::add_point(PointId p) { insert(space_->hvec(p)); }

void Subspace::insert(std::span<const Elem> v) {
  const std::size_t w = v.size();
  rows_.insert(rows_.end(), v.begin(), v.end());
  const std::size_t rows = rows_.size() / w;
  rank_ = geometry::rank(space_->field(), rows_, rows, w);
  rows_.resize(rank_ * w);
}

bool Subspace::contains(PointId p) const {
  if (rank_ == 0) return false;
  auto v = space_->hvec(p);
  std::vector<Elem> m = rows_;
  m.insert(m.end(), v.begin(), v.end());
  return geometry::rank(space_->field(), m, rank_ + 1, v.size()) == rank_;
}

bool Subspace::contains_line(LineId l) const {
  const Line& ln = space_->line(l);
  return contains(ln.basis[0]) && contains(ln.basis[1]);
}

std::vector<PointId> Subspace::points() const {
  std::vector<PointId> out;
  for (PointId p = 0; p < space_->point_count(); ++p)
    if (contains(p)) out.push_back(p);
  return out;
}

std::vector<LineId> Subspace::lines() const {
  std::vector<LineId> out;
  for (LineId l = 0; l < space_->line_count(); ++l)
    if (contains_line(l)) out.push_back(l);
  return out;
}

Subspace Subspace::join(const Subspace& other) const {
  Subspace u = *this;
  const std::size_t w = space_->params().n + 1;
  for (unsigned i = 0; i < other.rank_; ++i)
    u.insert(std::span<const Elem>(other.rows_.data() + i * w, w));
  return u;
}

bool Subspace::operator==(const Subspace& o) const {
  // Both are in reduced row echelon form, so equal spans have equal rows.
  return space_ == o.space_ && rank_ == o.rank_ && rows_ == o.rows_;
}

}  // namespace lig::geometry
