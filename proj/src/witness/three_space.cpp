#include <algorithm>

#include "lig/geometry/oracles.hpp"
#include "lig/witness/guided_context.hpp"

namespace lig::witness {

using geometry::TripleClass;

namespace {

void need_pg3(const Space& s) {
  const SpaceParams& p = s.params();
  if (p.kind != SpaceKind::Projective || p.n != 3) throw Error(ErrorCode::WrongDimension, "needs PG(3,q)");
}

TripleClass kind(const Space& s, const Triple& t) {
  const TripleClass c = geometry::oracle_classify3(s, t[0], t[1], t[2]);
  if (c != TripleClass::Triangle && c != TripleClass::ConcurrentNonCoplanar)
    throw Error(ErrorCode::WrongClass, "triple is neither a triangle nor a tripod");
  return c;
}

PointId vertex(const Space& s, const Triple& t) { return geometry::oracle_tripod_vertex(s, t[0], t[1], t[2]); }
Subspace plane(const Space& s, const Triple& t) { return geometry::oracle_trilateral_plane(s, t[0], t[1], t[2]); }

/// Lowest plane through line l and point p; if p is on l, the lowest plane through l.
Subspace plane_through(const Space& s, LineId l, PointId p) {
  if (!s.incident(p, l)) return Subspace::of_points(s, {s.line(l).basis[0], s.line(l).basis[1], p});
  for (PointId x = 0; x < s.point_count(); ++x)
    if (!s.incident(x, l)) return Subspace::of_points(s, {s.line(l).basis[0], s.line(l).basis[1], x});
  throw Error(ErrorCode::NoWitness, "space is a line");
}

/// First `count` lines through p in u, skipping `skip`.
std::vector<LineId> pencil(const Space& s, PointId p, const Subspace& u, std::size_t count, LineId skip = kNoLine) {
  std::vector<LineId> out;
  for (LineId l : lines_through_in(s, p, u)) {
    if (l == skip) continue;
    out.push_back(l);
    if (out.size() == count) return out;
  }
  throw Error(ErrorCode::NoWitness, "pencil too small");
}

LineId common_line(const Subspace& u, const Subspace& w) {
  for (LineId l : u.lines())
    if (w.contains_line(l)) return l;
  throw Error(ErrorCode::NoWitness, "subspaces share no line");
}

PointId first_common(const Space& s, LineId a, LineId b) {
  auto c = common_points(s, a, b);
  if (c.empty()) return kNoPoint;
  return c[0];
}

}  // namespace

Triple provide_t_witness(const GuidedContext& ctx, const Triple& a, LineId g1, LineId g2) {
  const Space& s = ctx.space;
  need_pg3(s);
  const TripleClass c = kind(s, a);
  std::vector<LineId> cand[3];
  for (int i = 0; i < 3; ++i) {
    const LineId u = a[i], v = a[(i + 1) % 3];
    std::vector<LineId> pool;
    if (c == TripleClass::Triangle) {
      pool = s.lines_through(*meet_point(s, u, v));
    } else {
      pool = Subspace::of_lines(s, {u, v}).lines();
    }
    for (LineId x : pool)
      if (ctx.model.sim(x, g1) && ctx.model.sim(x, g2)) cand[i].push_back(x);
  }
  for (LineId x0 : cand[0])
    for (LineId x1 : cand[1])
      for (LineId x2 : cand[2])
        if (!(x0 == x1 && x1 == x2)) return {x0, x1, x2};
  throw Error(ErrorCode::NoWitness, "no transversal triple");
}

std::array<LineId, 6> provide_equiv_plus_witness(const GuidedContext& ctx, const Triple& t1, const Triple& t2,
                                                 LineId g) {
  const Space& s = ctx.space;
  need_pg3(s);
  const TripleClass c1 = kind(s, t1), c2 = kind(s, t2);
  if (c1 != c2) throw Error(ErrorCode::NoWitness, "mixed triangle and tripod");

  if (c1 == TripleClass::Triangle) {
    const Subspace p1 = plane(s, t1), p2 = plane(s, t2);
    if (p1 == p2) {
      const PointId p = points_in(s, g, p1).front();
      auto x = pencil(s, p, p1, 3);
      return {x[0], x[1], x[2], x[0], x[1], x[2]};
    }
    const LineId sl = common_line(p1, p2);
    const PointId gp = sl == g ? s.line(g).points.front() : first_common(s, g, sl);
    if (gp != kNoPoint) {
      auto x1 = pencil(s, gp, p1, 2, sl);
      auto x2 = pencil(s, gp, p2, 2, sl);
      return {sl, x1[0], x1[1], sl, x2[0], x2[1]};
    }
    const PointId g1 = points_in(s, g, p1).front(), g2 = points_in(s, g, p2).front();
    const auto& xs = s.line(sl).points;
    return {s.join(xs[0], g1), s.join(xs[1], g1), s.join(xs[2], g1),
            s.join(xs[0], g2), s.join(xs[1], g2), s.join(xs[2], g2)};
  }

  const PointId v1 = vertex(s, t1), v2 = vertex(s, t2);
  if (v1 == v2) {
    const Subspace gam = plane_through(s, g, v1);
    auto x = pencil(s, v1, gam, 3);
    return {x[0], x[1], x[2], x[0], x[1], x[2]};
  }
  const LineId sl = s.join(v1, v2);
  if (sl == g || first_common(s, g, sl) != kNoPoint) {
    const Subspace gam = sl == g ? plane_through(s, g, v1) : Subspace::of_lines(s, {g, sl});
    auto x1 = pencil(s, v1, gam, 2, sl);
    auto x2 = pencil(s, v2, gam, 2, sl);
    return {sl, x1[0], x1[1], sl, x2[0], x2[1]};
  }
  // three planes through s, each cut with <V_i, g>
  std::vector<Subspace> sig;
  for (PointId x = 0; x < s.point_count() && sig.size() < 3; ++x) {
    if (s.incident(x, sl)) continue;
    Subspace p = plane_through(s, sl, x);
    if (std::find(sig.begin(), sig.end(), p) == sig.end()) sig.push_back(std::move(p));
  }
  std::array<LineId, 6> out{};
  const PointId vs[2] = {v1, v2};
  for (int i = 0; i < 2; ++i) {
    const Subspace gam = plane_through(s, g, vs[i]);
    for (int j = 0; j < 3; ++j) {
      LineId hit = kNoLine;
      for (LineId l : lines_through_in(s, vs[i], gam))
        if (sig[j].contains_line(l)) hit = l;
      if (hit == kNoLine) throw Error(ErrorCode::NoWitness, "plane cut failed");
      out[i * 3 + j] = hit;
    }
  }
  return out;
}

std::pair<LineId, LineId> provide_equiv_minus_witness(const GuidedContext& ctx, const Triple& t1, const Triple& t2,
                                                      LineId g) {
  const Space& s = ctx.space;
  need_pg3(s);
  const TripleClass c1 = kind(s, t1), c2 = kind(s, t2);
  if (c1 == c2) throw Error(ErrorCode::NoWitness, "same class");
  const bool swap = c1 != TripleClass::Triangle;
  const Triple& tri = swap ? t2 : t1;
  const Triple& pod = swap ? t1 : t2;
  const Subspace pi = plane(s, tri);
  const PointId v = vertex(s, pod);
  LineId xt, xp;
  if (pi.contains_line(g)) {
    xt = g;
    xp = pod[0];
  } else if (s.incident(v, g)) {
    xp = g;
    xt = tri[0];
  } else {
    const PointId gp = points_in(s, g, pi).front();
    xp = s.join(v, gp);
    xt = pencil(s, gp, pi, 1, xp).front();
    if (!pi.contains(v)) {
      // avoid the trace of <V, g> in the plane
      const Subspace gam = plane_through(s, g, v);
      for (LineId l : lines_through_in(s, gp, pi))
        if (!gam.contains_line(l)) {
          xt = l;
          break;
        }
    }
  }
  return swap ? std::pair{xp, xt} : std::pair{xt, xp};
}

Triple provide_oplus_witness(const GuidedContext& ctx, const Triple& t1, const Triple& t2) {
  const Space& s = ctx.space;
  need_pg3(s);
  const TripleClass c1 = kind(s, t1), c2 = kind(s, t2);
  if (c1 != c2) throw Error(ErrorCode::NoWitness, "mixed triangle and tripod");
  auto avoid = [&](const std::vector<LineId>& pool, const Triple& t, LineId sl) {
    for (LineId l : pool)
      if (l != sl && std::find(t.begin(), t.end(), l) == t.end()) return l;
    return kNoLine;
  };
  if (c1 == TripleClass::Triangle) {
    const Subspace p1 = plane(s, t1), p2 = plane(s, t2);
    if (p1 == p2) throw Error(ErrorCode::NoWitness, "triangles share a plane");
    const LineId sl = common_line(p1, p2);
    for (PointId p : s.line(sl).points) {
      const LineId x1 = avoid(lines_through_in(s, p, p1), t1, sl);
      const LineId x2 = avoid(lines_through_in(s, p, p2), t2, sl);
      if (x1 != kNoLine && x2 != kNoLine) return {x1, x2, sl};
    }
    throw Error(ErrorCode::NoWitness, "every point of the common line is used up");
  }
  const PointId v1 = vertex(s, t1), v2 = vertex(s, t2);
  if (v1 == v2) throw Error(ErrorCode::NoWitness, "tripods share a vertex");
  const LineId sl = s.join(v1, v2);
  std::vector<Subspace> seen;
  for (PointId x = 0; x < s.point_count(); ++x) {
    if (s.incident(x, sl)) continue;
    Subspace sig = plane_through(s, sl, x);
    if (std::find(seen.begin(), seen.end(), sig) != seen.end()) continue;
    const LineId x1 = avoid(lines_through_in(s, v1, sig), t1, sl);
    const LineId x2 = avoid(lines_through_in(s, v2, sig), t2, sl);
    if (x1 != kNoLine && x2 != kNoLine) return {x1, x2, sl};
    seen.push_back(std::move(sig));
  }
  throw Error(ErrorCode::NoWitness, "every plane through the common line is used up");
}

std::array<LineId, 5> provide_sigma_witness(const GuidedContext& ctx, LineId a, LineId b, LineId g) {
  const Space& s = ctx.space;
  need_pg3(s);
  if (!geometry::oracle_skew(s, a, b)) throw Error(ErrorCode::NoWitness, "a and b are not skew");
  for (PointId p : s.line(a).points) {
    const Subspace pb = plane_through(s, b, p);
    for (PointId r : points_in(s, g, pb)) {
      const LineId x = r == p ? s.join(p, s.line(b).points.front()) : s.join(p, r);
      const PointId q = *meet_point(s, x, b);
      const Subspace ax = Subspace::of_lines(s, {a, x}), bx = Subspace::of_lines(s, {b, x});
      LineId a1 = kNoLine, a2 = kNoLine, b1 = kNoLine, b2 = kNoLine;
      for (LineId l : s.lines_through(p))
        if (!ax.contains_line(l)) {
          a1 = l;
          break;
        }
      for (LineId l : ax.lines())
        if (!s.incident(p, l)) {
          a2 = l;
          break;
        }
      for (LineId l : s.lines_through(q))
        if (!bx.contains_line(l)) {
          b1 = l;
          break;
        }
      for (LineId l : bx.lines())
        if (!s.incident(q, l)) {
          b2 = l;
          break;
        }
      if (a1 != kNoLine && a2 != kNoLine && b1 != kNoLine && b2 != kNoLine) return {x, a1, a2, b1, b2};
    }
  }
  throw Error(ErrorCode::NoWitness, "no sigma configuration");
}

}  // namespace lig::witness
