#include <algorithm>

#include "lig/geometry/oracles.hpp"
#include "lig/witness/guided_context.hpp"

namespace lig::witness {

namespace {

void need_affine(const Space& s) {
  if (s.params().kind != SpaceKind::Affine) throw Error(ErrorCode::WrongClass, "affine spaces only");
}

// M_r chains. Level k uses a_1..a_k; V is the span of a_1..a_{k-1}.
class PointChains {
 public:
  PointChains(const Space& s, const std::vector<LineId>& a) : s_(s), a_(a) {
    for (std::size_t k = 1; k <= a.size(); ++k)
      spans_.push_back(Subspace::of_lines(s, std::vector<LineId>(a.begin(), a.begin() + static_cast<long>(k))));
  }

  const Subspace& span(std::size_t k) const { return spans_[k - 1]; }

  /// Lines to add so that some listed line passes through p.
  std::vector<LineId> to_point(std::size_t k, PointId p) const {
    if (k == 1) {
      if (!s_.incident(p, a_[0])) throw Error(ErrorCode::NoWitness, "point off a1");
      return {};
    }
    const Subspace& v = span(k - 1);
    const LineId am = a_[k - 1];
    if (v.contains(p)) return to_point(k - 1, p);
    const std::vector<PointId> vp = v.points();
    if (s_.incident(p, am)) {
      auto out = to_point(k - 1, vp.front());
      out.push_back(s_.join(vp.front(), p));
      return out;
    }
    // one line joining V and a_m through p
    for (PointId x : vp)
      for (PointId y : s_.line(am).points) {
        if (x == y) continue;
        const LineId b1 = s_.join(x, y);
        if (!s_.incident(p, b1)) continue;
        auto out = to_point(k - 1, x);
        out.push_back(b1);
        return out;
      }
    // b1 = XY, then b2 = PZ for a further point Z of b1 meeting V or a_m again
    for (int pass = 0; pass < 2; ++pass)
      for (PointId x : vp)
        for (PointId y : s_.line(am).points) {
          if (x == y) continue;
          const LineId b1 = s_.join(x, y);
          for (PointId z : s_.line(b1).points) {
            if (z == p) continue;
            const LineId b2 = s_.join(p, z);
            for (PointId w : s_.line(b2).points) {
              if (w == z) continue;
              const bool on_am = s_.incident(w, am);
              if (pass == 0 ? !on_am : !v.contains(w)) continue;
              auto out = to_point(k - 1, x);
              out.push_back(b1);
              if (!on_am) {
                auto extra = to_point(k - 1, w);
                out.insert(out.end(), extra.begin(), extra.end());
              }
              out.push_back(b2);
              return out;
            }
          }
        }
    throw Error(ErrorCode::NoWitness, "no two-line chain to the point");
  }

 private:
  const Space& s_;
  const std::vector<LineId>& a_;
  std::vector<Subspace> spans_;
};

}  // namespace

std::vector<LineId> provide_affine_extension(const GuidedContext& ctx, LineId a1, LineId a2) {
  const Space& s = ctx.space;
  need_affine(s);
  if (!geometry::oracle_skew(s, a1, a2)) throw Error(ErrorCode::NoWitness, "a1 and a2 are not skew");
  const std::size_t m = s.params().m;
  Subspace u = Subspace::of_lines(s, {a1, a2});
  std::vector<LineId> out;
  for (LineId l = 0; l < s.line_count() && out.size() + 2 < m; ++l) {
    Subspace w = u.join(Subspace::of_lines(s, {l}));
    if (w.dim() == u.dim() + 2) {
      out.push_back(l);
      u = std::move(w);
    }
  }
  if (out.size() + 2 != m) throw Error(ErrorCode::NoWitness, "no independent extension");
  return out;
}

std::vector<LineId> provide_mr_chain(const GuidedContext& ctx, const std::vector<LineId>& a, LineId target,
                                     unsigned steps) {
  const Space& s = ctx.space;
  need_affine(s);
  if (a.empty()) throw Error(ErrorCode::EmptyList, "empty line list");
  if (std::find(a.begin(), a.end(), target) != a.end()) return {};
  PointChains pc(s, a);
  if (!pc.span(a.size()).contains_line(target)) throw Error(ErrorCode::NoWitness, "target outside the span");
  const auto& pts = s.line(target).points;
  std::vector<LineId> raw = pc.to_point(a.size(), pts[0]);
  auto second = pc.to_point(a.size(), pts[1]);
  raw.insert(raw.end(), second.begin(), second.end());
  std::vector<LineId> out;
  for (LineId l : raw)
    if (std::find(a.begin(), a.end(), l) == a.end() && std::find(out.begin(), out.end(), l) == out.end())
      out.push_back(l);
  if (out.size() > steps) throw Error(ErrorCode::NoWitness, "chain longer than the step bound");
  return out;
}

LineId provide_delta0_partner(const GuidedContext& ctx, const std::vector<LineId>& a, LineId g) {
  const Space& s = ctx.space;
  need_affine(s);
  const Subspace u = Subspace::of_lines(s, a);
  if (u.contains_line(g)) return g;
  const auto hit = points_in(s, g, u);
  if (!hit.empty()) return lines_through_in(s, hit.front(), u).front();
  for (PointId x : u.points())
    for (LineId l : lines_through_in(s, x, u))
      if (geometry::meet(s, l, g).tag == geometry::MeetResult::Tag::Parallel) return l;
  throw Error(ErrorCode::NoWitness, "no coplanar partner in the span");
}

}  // namespace lig::witness
