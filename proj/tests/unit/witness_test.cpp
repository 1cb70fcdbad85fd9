#include "helpers.hpp"
#include "lig/geometry/model_bridge.hpp"
#include "lig/model/predicate_table.hpp"
#include "lig/witness/guided_context.hpp"

using namespace lig;
using namespace lig::witness;
using geometry::TripleClass;
using lig::test::code_of;
using lig::test::find_pair;
using lig::test::find_triple;

namespace {

struct World {
  explicit World(Space sp) : s(std::move(sp)), m(geometry::model_from_space(s)), tab(m), ctx{s, m, 0} {}
  Space s;
  IntersectionModel m;
  PredicateTable tab;
  GuidedContext ctx;
};

}  // namespace

TEST_CASE("# witnesses") {
  World w(lig::test::pg(4, 2));
  const auto tri = find_triple(w.s, TripleClass::Triangle);
  const auto [a1, b1, a2, b2] = std::array{tri[0], tri[1], tri[1], tri[2]};
  int generic = 0;
  for (LineId g = 0; g < w.s.line_count(); ++g) {
    const auto [h1, h2] = provide_hash_witness(w.ctx, a1, b1, a2, b2, g);
    const bool matrix = (w.tab.sbar(a1, b1, h1) && w.tab.sbar(a2, b2, h2) && w.tab.s(h1, h2, g)) ||
                        w.tab.sbar(a1, b1, g) || w.tab.sbar(a2, b2, g);
    CHECK(matrix);
    if (!w.tab.sbar(a1, b1, g) && !w.tab.sbar(a2, b2, g)) ++generic;
  }
  CHECK(generic > 0);

  // meet point on g: the trivial branch
  const LineId g_on = a1;
  CHECK(w.tab.sbar(a1, b1, g_on));
  CHECK_NOTHROW(provide_hash_witness(w.ctx, a1, b1, a2, b2, g_on));

  LineId off = 0;
  const PointId o = geometry::meet(w.s, a1, b1).point;
  while (w.s.incident(o, off)) ++off;
  CHECK(code_of([&] { provide_hash_witness(w.ctx, a1, b1, a1, b1, off); }) == ErrorCode::NoWitness);
}

TEST_CASE("independent extensions") {
  {
    World w(lig::test::pg(4, 2));
    const auto [k1, k2] = find_pair(w.s, [&](LineId p, LineId q) { return lig::test::is_skew(w.s, p, q); });
    CHECK(provide_independent_extension(w.ctx, k1, k2).empty());
  }
  {
    World w(lig::test::pg(5, 2));
    const auto [k1, k2] = find_pair(w.s, [&](LineId p, LineId q) { return lig::test::is_skew(w.s, p, q); });
    const auto ext = provide_independent_extension(w.ctx, k1, k2);
    REQUIRE(ext.size() == 1);
    CHECK(geometry::oracle_span_dim(w.s, {k1, k2, ext[0]}) == 5);
  }
  {
    World w(Space::build(SpaceKind::Projective, 6, 2, geometry::BuildOptions{3000}));
    const auto [k1, k2] = find_pair(w.s, [&](LineId p, LineId q) { return lig::test::is_skew(w.s, p, q); });
    const auto ext = provide_independent_extension(w.ctx, k1, k2);
    REQUIRE(ext.size() == 1);
    CHECK(geometry::oracle_span_dim(w.s, {k1, k2, ext[0]}) == 5);
  }
}

TEST_CASE("projective chains, n = 4") {
  World w(lig::test::pg(4, 2));
  const auto [k1, k2] = find_pair(w.s, [&](LineId p, LineId q) { return lig::test::is_skew(w.s, p, q); });
  for (LineId g = 0; g < w.s.line_count(); ++g) {
    const ProjChain c = provide_chain(w.ctx, {k1}, k2, g);
    REQUIRE(c.b.size() == 1);
    const LineId b2 = c.b[0];
    CHECK(w.tab.hash(b2, k1, b2, k2));
    CHECK((w.m.sim(g, b2)));
  }
  const auto [x, y] = find_pair(w.s, [&](LineId p, LineId q) { return lig::test::is_meet(w.s, p, q); });
  int refused = 0;
  for (LineId g = 0; g < w.s.line_count(); ++g) {
    try {
      provide_chain(w.ctx, {x}, y, g);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NoWitness);
      ++refused;
    }
  }
  CHECK(refused > 0);
}

TEST_CASE("three-space witnesses") {
  World w(lig::test::pg(3, 2));
  const auto [a, b] = find_pair(w.s, [&](LineId p, LineId q) { return lig::test::is_skew(w.s, p, q); });
  for (LineId g = 0; g < w.s.line_count(); ++g) {
    const auto [x, a1, a2, b1, b2] = provide_sigma_witness(w.ctx, a, b, g);
    CHECK(w.m.sim(x, a));
    CHECK(w.m.sim(x, b));
    CHECK((x == g || w.m.sim(x, g)));
    for (int i = 0; i < 2; ++i) {
      const LineId ai = i ? a2 : a1, bi = i ? b2 : b1;
      const LineId t1[3] = {a, ai, x}, t2[3] = {b, bi, x};
      CHECK(geometry::oracle_equiv_plus(w.s, t1, t2));
      CHECK(geometry::oracle_equiv_oplus(w.s, t1, t2));
    }
    const LineId m1[3] = {a, a1, x}, m2[3] = {a, a2, x};
    CHECK(geometry::oracle_equiv_minus(w.s, m1, m2));
  }

  // same-plane triangles: the x's pass through the point where g meets the plane
  const auto tri = find_triple(w.s, TripleClass::Triangle);
  const auto plane = geometry::oracle_trilateral_plane(w.s, tri[0], tri[1], tri[2]);
  pred::Triple other{};
  for (LineId x : plane.lines())
    for (LineId y : plane.lines())
      for (LineId z : plane.lines())
        if (x < y && y < z && pred::Triple{x, y, z} != tri &&
            geometry::oracle_classify3(w.s, x, y, z) == TripleClass::Triangle)
          other = {x, y, z};
  REQUIRE(other != pred::Triple{});
  for (LineId g = 0; g < w.s.line_count(); ++g) {
    const auto x = provide_equiv_plus_witness(w.ctx, tri, other, g);
    const auto simeq = [&](LineId p, LineId q) { return p == q || w.m.sim(p, q); };
    for (int i = 0; i < 2; ++i) {
      const pred::Triple& t = i ? other : tri;
      for (int j = 0; j < 3; ++j) {
        const LineId xij = x[i * 3 + j];
        for (LineId l : t) CHECK(simeq(xij, l));
        CHECK(simeq(xij, g));
        CHECK(xij != x[i * 3 + (j + 1) % 3]);
      }
    }
    for (int j = 0; j < 3; ++j) CHECK(simeq(x[j], x[3 + j]));
  }
}

TEST_CASE("affine M_r chains") {
  World w(lig::test::ag(3, 3));
  const auto [k1, k2] = find_pair(w.s, [&](LineId p, LineId q) { return lig::test::is_skew(w.s, p, q); });
  for (LineId g = 0; g < w.s.line_count(); ++g) {
    const auto chain = provide_mr_chain(w.ctx, {k1, k2}, g, 4);
    CHECK(chain.size() <= 4);
  }
  CHECK(provide_mr_chain(w.ctx, {k1, k2}, k1, 4).empty());

  const auto [x, y] = find_pair(w.s, [&](LineId p, LineId q) { return lig::test::is_meet(w.s, p, q); });
  const auto plane = geometry::Subspace::of_lines(w.s, {x, y});
  LineId off = 0;
  while (plane.contains_line(off)) ++off;
  CHECK(code_of([&] { provide_mr_chain(w.ctx, {x, y}, off, 4); }) == ErrorCode::NoWitness);
}

TEST_CASE("affine M_r chains on AG(3,5) pass the # checks") {
  World w(lig::test::ag(3, 5));
  const auto [k1, k2] = find_pair(w.s, [&](LineId p, LineId q) { return lig::test::is_skew(w.s, p, q); });
  for (LineId g = 0; g < w.s.line_count(); g += 11) {
    std::vector<LineId> l{k1, k2};
    const auto chain = provide_mr_chain(w.ctx, l, g, 4);
    CHECK(chain.size() <= 4);
    // each new line is on a list line or meets two earlier ones in distinct points
    const auto reachable = [&](LineId x) {
      if (std::find(l.begin(), l.end(), x) != l.end()) return true;
      for (std::size_t i = 0; i < l.size(); ++i)
        for (std::size_t j = i + 1; j < l.size(); ++j)
          if (w.tab.hash(l[i], x, l[j], x)) return true;
      return false;
    };
    for (LineId b : chain) {
      CHECK(reachable(b));
      l.push_back(b);
    }
    CHECK(reachable(g));
  }
}
