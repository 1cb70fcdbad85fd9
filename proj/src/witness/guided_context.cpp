#include "lig/witness/guided_context.hpp"

#include <algorithm>

namespace lig::witness {

std::vector<PointId> common_points(const Space& s, LineId a, LineId b) {
  const auto& pa = s.line(a).points;
  const auto& pb = s.line(b).points;
  std::vector<PointId> out;
  std::set_intersection(pa.begin(), pa.end(), pb.begin(), pb.end(), std::back_inserter(out));
  return out;
}

std::optional<PointId> meet_point(const Space& s, LineId a, LineId b) {
  if (a == b) return std::nullopt;
  auto c = common_points(s, a, b);
  if (c.size() != 1) return std::nullopt;
  return c[0];
}

std::vector<LineId> lines_through_in(const Space& s, PointId p, const Subspace& u) {
  std::vector<LineId> out;
  for (LineId l : s.lines_through(p))
    if (u.contains_line(l)) out.push_back(l);
  return out;
}

std::vector<PointId> points_in(const Space& s, LineId l, const Subspace& u) {
  std::vector<PointId> out;
  for (PointId p : s.line(l).points)
    if (u.contains(p)) out.push_back(p);
  return out;
}

namespace {

template <class F>
auto wrap(F&& f) -> std::optional<decltype(f())> {
  try {
    return f();
  } catch (const Error& e) {
    if (e.code() == ErrorCode::NoWitness || e.code() == ErrorCode::WrongClass) return std::nullopt;
    throw;
  }
}

}  // namespace

std::optional<std::vector<LineId>> GeometricProvider::proj_extension(LineId a1, LineId b1) const {
  return wrap([&] { return provide_independent_extension(ctx_, a1, b1); });
}

std::optional<std::vector<LineId>> GeometricProvider::proj_chain_even(const std::vector<LineId>& a, LineId b1,
                                                                      LineId g) const {
  return wrap([&] { return provide_chain(ctx_, a, b1, g).b; });
}

std::optional<std::pair<std::vector<LineId>, std::vector<LineId>>> GeometricProvider::proj_chain_odd(
    const std::vector<LineId>& a, LineId b1, LineId g) const {
  return wrap([&] {
    ProjChain c = provide_chain(ctx_, a, b1, g);
    return std::pair{c.b, c.c};
  });
}

std::vector<LineId> GeometricProvider::proj_refutation_order(const std::vector<LineId>& a, LineId b1) const {
  // Lines that meet U = <b_1, a_1..a_m> in few points are where a
  // non-skew pair breaks down; try them first.
  std::vector<LineId> span = a;
  span.push_back(b1);
  const Subspace u = Subspace::of_lines(ctx_.space, span);
  const bool odd = ctx_.space.params().n % 2 == 1;
  std::vector<LineId> out;
  for (LineId g = 0; g < ctx_.space.line_count(); ++g) {
    const std::size_t k = points_in(ctx_.space, g, u).size();
    if (odd ? k <= 1 : k == 0) out.push_back(g);
  }
  return out;
}

std::optional<Triple> GeometricProvider::t_witness(const Triple& a, LineId g1, LineId g2) const {
  return wrap([&] { return provide_t_witness(ctx_, a, g1, g2); });
}

std::optional<std::array<LineId, 6>> GeometricProvider::equiv_plus_witness(const Triple& t1, const Triple& t2,
                                                                           LineId g) const {
  return wrap([&] { return provide_equiv_plus_witness(ctx_, t1, t2, g); });
}

std::optional<std::pair<LineId, LineId>> GeometricProvider::equiv_minus_witness(const Triple& t1, const Triple& t2,
                                                                                LineId g) const {
  return wrap([&] { return provide_equiv_minus_witness(ctx_, t1, t2, g); });
}

std::optional<Triple> GeometricProvider::equiv_oplus_witness(const Triple& t1, const Triple& t2) const {
  return wrap([&] { return provide_oplus_witness(ctx_, t1, t2); });
}

std::optional<std::array<LineId, 5>> GeometricProvider::sigma_witness(LineId a, LineId b, LineId g) const {
  return wrap([&] { return provide_sigma_witness(ctx_, a, b, g); });
}

std::optional<std::vector<LineId>> GeometricProvider::affine_extension(LineId a1, LineId a2) const {
  return wrap([&] { return provide_affine_extension(ctx_, a1, a2); });
}

std::optional<std::vector<LineId>> GeometricProvider::mr_chain(const std::vector<LineId>& a, LineId target,
                                                               unsigned steps) const {
  return wrap([&] { return provide_mr_chain(ctx_, a, target, steps); });
}

std::optional<LineId> GeometricProvider::delta0_partner(const std::vector<LineId>& a, LineId g) const {
  return wrap([&] { return provide_delta0_partner(ctx_, a, g); });
}

}  // namespace lig::witness
