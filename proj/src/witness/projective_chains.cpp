#include <functional>

#include "lig/geometry/oracles.hpp"
#include "lig/witness/guided_context.hpp"

namespace lig::witness {

using geometry::meet;
using geometry::MeetResult;

std::pair<LineId, LineId> provide_hash_witness(const GuidedContext& ctx, LineId a1, LineId b1, LineId a2, LineId b2,
                                               LineId g) {
  const Space& s = ctx.space;
  const MeetResult m1 = meet(s, a1, b1), m2 = meet(s, a2, b2);
  if (!m1.is_point() || !m2.is_point()) throw Error(ErrorCode::NoWitness, "pairs do not meet in a point");
  const PointId p1 = m1.point, p2 = m2.point;
  // a P_i on g makes the S-bar branch true for any h_i
  if (s.incident(p1, g) || s.incident(p2, g)) return {a1, a2};
  if (p1 == p2) throw Error(ErrorCode::NoWitness, "meet points coincide off g");
  const LineId through = s.join(p1, p2);
  for (PointId h : s.line(g).points) {
    if (s.incident(h, through)) continue;
    return {s.join(p1, h), s.join(p2, h)};
  }
  throw Error(ErrorCode::NoWitness, "g lies on the join of the meet points");
}

std::vector<LineId> provide_independent_extension(const GuidedContext& ctx, LineId a1, LineId b1) {
  const Space& s = ctx.space;
  const SpaceParams& p = s.params();
  if (p.kind != SpaceKind::Projective) throw Error(ErrorCode::WrongClass, "projective spaces only");
  if (!geometry::oracle_skew(s, a1, b1)) throw Error(ErrorCode::NoWitness, "a1 and b1 are not skew");
  Subspace u = Subspace::of_lines(s, {a1, b1});
  std::vector<LineId> out;
  for (LineId l = 0; l < s.line_count() && out.size() + 1 < p.m; ++l) {
    Subspace w = u.join(Subspace::of_lines(s, {l}));
    if (w.dim() == u.dim() + 2) {
      out.push_back(l);
      u = std::move(w);
    }
  }
  if (out.size() + 1 != p.m) throw Error(ErrorCode::NoWitness, "no independent extension");
  return out;
}

namespace {

// U_1 = b_1, U_i = <U_{i-1}, a_{i-1}>. Every point of U_i lies on a line
// b_i meeting a_{i-1} and some b_{i-1} from the previous level in two
// distinct points.
class ChainBuilder {
 public:
  ChainBuilder(const Space& s, const std::vector<LineId>& a, LineId b1) : s_(s), a_(a) {
    levels_.push_back(Subspace::of_lines(s, {b1}));
    for (LineId x : a) {
      Subspace next = levels_.back().join(Subspace::of_lines(s, {x}));
      if (next.dim() != levels_.back().dim() + 2) throw Error(ErrorCode::NoWitness, "a is not independent of b1");
      levels_.push_back(std::move(next));
    }
  }

  const Subspace& top() const { return levels_.back(); }

  /// Options (Y, Z) for the last line through G at level i (1-based, i >= 2).
  void options(std::size_t i, PointId g, const std::function<bool(PointId, PointId)>& f) const {
    const Subspace& prev = levels_[i - 2];
    const LineId ai = a_[i - 2];
    if (prev.contains(g)) {
      for (PointId z : s_.line(ai).points)
        if (f(g, z)) return;
    } else if (s_.incident(g, ai)) {
      for (PointId y : prev.points())
        if (f(y, g)) return;
    } else {
      for (PointId z : s_.line(ai).points) {
        const LineId l = s_.join(g, z);
        for (PointId y : s_.line(l).points)
          if (y != z && prev.contains(y) && f(y, z)) return;
      }
    }
  }

  /// First chain b_2..b_i whose last line passes through g.
  std::vector<LineId> to_point(std::size_t i, PointId g) const {
    if (i == 1) return {};
    std::vector<LineId> out;
    options(i, g, [&](PointId y, PointId z) {
      out = to_point(i - 1, y);
      out.push_back(s_.join(y, z));
      return true;
    });
    if (out.empty()) throw Error(ErrorCode::NoWitness, "point outside the reachable span");
    return out;
  }

  /// Chain ending at level m+1 through g with last line != avoid.
  std::optional<std::vector<LineId>> ending(PointId g, LineId avoid) const {
    const std::size_t top_level = levels_.size();
    std::optional<std::vector<LineId>> out;
    options(top_level, g, [&](PointId y, PointId z) {
      const LineId l = s_.join(y, z);
      if (l == avoid) return false;
      std::vector<LineId> ch = to_point(top_level - 1, y);
      ch.push_back(l);
      out = std::move(ch);
      return true;
    });
    return out;
  }

 private:
  const Space& s_;
  const std::vector<LineId>& a_;
  std::vector<Subspace> levels_;
};

}  // namespace

ProjChain provide_chain(const GuidedContext& ctx, const std::vector<LineId>& a, LineId b1, LineId g) {
  const Space& s = ctx.space;
  if (s.params().kind != SpaceKind::Projective) throw Error(ErrorCode::WrongClass, "projective spaces only");
  if (a.size() != s.params().m) throw Error(ErrorCode::WrongDimension, "a must have m lines");
  ChainBuilder cb(s, a, b1);
  const bool odd = s.params().n % 2 == 1;
  const std::vector<PointId> on = points_in(s, g, cb.top());
  ProjChain out;
  if (!odd) {
    for (PointId p : on)
      if (auto ch = cb.ending(p, g)) {
        out.b = std::move(*ch);
        return out;
      }
    throw Error(ErrorCode::NoWitness, "g misses the span");
  }
  for (std::size_t i = 0; i < on.size(); ++i) {
    auto cb1 = cb.ending(on[i], g);
    if (!cb1) continue;
    for (std::size_t j = i + 1; j < on.size(); ++j)
      if (auto cb2 = cb.ending(on[j], g)) {
        out.b = std::move(*cb1);
        out.c = std::move(*cb2);
        return out;
      }
  }
  throw Error(ErrorCode::NoWitness, "g meets the span in fewer than two points");
}

}  // namespace lig::witness
