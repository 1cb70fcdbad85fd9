#include "helpers.hpp"
#include "lig/dsl/corpus.hpp"
#include "lig/dsl/dsl_eval.hpp"
#include "lig/dsl/lint.hpp"
#include "lig/dsl/parser.hpp"
#include "lig/verify/registry.hpp"

using namespace lig;
using namespace lig::dsl;
using geometry::TripleClass;
using lig::test::code_of;

namespace {

const char* kS =
    "S(a,b,c) := forall g . exists h . sim(g,h) & sim(a,b) & sim(b,c) & sim(c,a) & sim(a,h) & sim(b,h) & sim(c,h)";

}  // namespace

TEST_CASE("parse a definition") {
  const Definition d = parse_definition(kS);
  CHECK(d.name == "S");
  CHECK(d.params == std::vector<std::string>{"a", "b", "c"});
  REQUIRE(d.body->kind == NodeKind::Forall);
  CHECK(d.body->vars == std::vector<std::string>{"g"});
  const NodePtr& ex = d.body->kids.at(0);
  REQUIRE(ex->kind == NodeKind::Exists);
  const NodePtr& conj = ex->kids.at(0);
  CHECK(conj->kind == NodeKind::And);
  CHECK(conj->kids.size() == 7);
  for (const auto& k : conj->kids) CHECK(k->kind == NodeKind::Sim);
  CHECK(free_vars(d.body) == std::set<std::string>{"a", "b", "c"});
}

TEST_CASE("identically false atom parses") {
  const Definition d = parse_definition("X(a) := sim(a,a)");
  CHECK(d.body->kind == NodeKind::Sim);
}

TEST_CASE("parse errors") {
  CHECK(code_of([] { parse_definition("Y(a) := !sim(a,b)"); }) == ErrorCode::UnboundVariable);
  try {
    parse_definition("Z(a) :=\n  sim(a, ");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() > 0);
  }
  CHECK(code_of([] { parse_definition("Z(a) := sim(a) "); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_definition("Z(a) := exists forall . sim(a, a)"); }) == ErrorCode::ParseError);
  // an empty block is what a family over an empty range leaves behind
  CHECK(parse_definition("Z(a) := exists . sim(a, a)").body->kind == NodeKind::Sim);
}

TEST_CASE("print round trip") {
  const char* texts[] = {
      kS,
      "F(a, b) := eq(a, b) | !(exists x y . sim(x, a) & neq(x, y) & G(x, y, b))",
      "G(a) := forall x . (sim(a, x) | true) & false",
  };
  for (const char* t : texts) {
    const Definition d = parse_definition(t);
    const Definition back = parse_definition(print(d));
    CHECK(same(d.body, back.body));
    CHECK(print(back) == print(d));
  }
}

TEST_CASE("positivity lint") {
  const Definition s = parse_definition(kS);
  CHECK(check_positive(s, PositivityFlags{false, false}).empty());

  const Definition neg = parse_definition("Bad(a, b) := !sim(a, b)");
  const auto v = check_positive(neg, PositivityFlags{true, true});
  REQUIRE(v.size() == 1);
  CHECK(v[0].what == "negation");
  CHECK(v[0].line == 1);
  CHECK(v[0].column == 14);

  const Corpus c = Corpus::builtin();
  const Instance inst = c.instantiate(SpaceParams::make(SpaceKind::Projective, 3, 2));
  const Instance::Entry* t = inst.find("T");
  REQUIRE(t != nullptr);
  CHECK(check_positive(t->def, PositivityFlags{true, true}, inst.resolver()).empty());
  const auto strict = check_positive(t->def, PositivityFlags{true, false}, inst.resolver());
  CHECK(strict.size() == 3);
  for (const auto& x : strict) CHECK(x.what == "neq atom");

  const Definition e = parse_definition("E(a, b) := eq(a, b) | sim(a, b)");
  CHECK(check_positive(e, PositivityFlags{false, false}).size() == 1);
  CHECK(check_positive(e, PositivityFlags{true, false}).empty());
}

TEST_CASE("template expansion") {
  Env env{{"n", 3}, {"m", 2}};
  CHECK(same(parse_formula(expand("[sim(a{i}, b{i}) for i in 1..m join &]", env)),
             parse_formula("sim(a1, b1) & sim(a2, b2)")));
  CHECK(same(parse_formula(expand("exists [x{i} for i in 1..n join sp] . eq(x1, x3)", env)),
             parse_formula("exists x1 x2 x3 . eq(x1, x3)")));
  CHECK(expand("[x{i} for i in 2..1 join ,]", env).empty());
  CHECK(expand("a{n%2+1}", env) == "a2");
  CHECK(eval_int("2*m+n-1", env) == 6);
  CHECK(Guard::parse("projective n>=4 even | affine n>=3").admits(SpaceParams::make(SpaceKind::Affine, 3, 2)));
  CHECK_FALSE(Guard::parse("projective n>=4 even").admits(SpaceParams::make(SpaceKind::Projective, 5, 2)));
}

TEST_CASE("corpus instances per space") {
  const Corpus c = Corpus::builtin();
  CHECK(c.units().size() == 21);
  CHECK(c.instantiate(SpaceParams::make(SpaceKind::Projective, 3, 2)).entries().size() == 10);
  CHECK(c.instantiate(SpaceParams::make(SpaceKind::Projective, 4, 2)).entries().size() == 5);
  for (const char* label : {"pg:3:2", "pg:4:2", "pg:5:2", "ag:3:2", "ag:3:3", "ag:4:2", "ag:4:3"}) {
    const Instance inst = c.instantiate(parse_space_label(label));
    for (const auto& [name, violations] : inst.lint()) {
      CAPTURE(name);
      CHECK(violations.empty());
    }
  }
}

TEST_CASE("unresolved references") {
  const Corpus c = Corpus::from_sources({{"a.fo", "#name A\n#guard any n>=3\nA(x) := B(x, x)\n"}});
  CHECK(code_of([&] { c.instantiate(SpaceParams::make(SpaceKind::Projective, 3, 2)); }) ==
        ErrorCode::UnresolvedPredRef);
}

TEST_CASE("reference evaluation") {
  auto b = verify::make_bundle("pg:3:2");
  const Instance inst = Corpus::builtin().instantiate(b->params());
  DslEvaluator dsl(inst, b->model);
  pred::Evaluator hand(b->table);
  const auto& through = b->space.lines_through(0);
  const std::vector<LineId> conc{through[0], through[1], through[2]};
  CHECK(dsl.eval("S", conc).is_true());
  CHECK(hand.s(conc[0], conc[1], conc[2]).is_true());
  const auto tri = lig::test::find_triple(b->space, TripleClass::Triangle);
  CHECK(dsl.eval("S", {tri[0], tri[1], tri[2]}).value == hand.s(tri[0], tri[1], tri[2]).value);

  const NodePtr f = parse_formula("exists x . sim(x, a) & sim(x, b)");
  const auto [k1, k2] = lig::test::find_pair(b->space, [&](LineId p, LineId q) { return lig::test::is_skew(b->space, p, q); });
  CHECK(dsl.eval(f, {{"a", k1}, {"b", k2}}).is_true());
  CHECK(code_of([&] { dsl.eval("Nope", {0}); }) == ErrorCode::UnresolvedPredRef);
  CHECK(code_of([&] { dsl.eval("S", {0, 1}); }) == ErrorCode::WrongDimension);

  DslEvaluator starved(inst, b->model, DslOptions{5, true});
  CHECK(starved.eval("Sigma", {k1, k2}).value == Tri::Unknown);
}

TEST_CASE("reference evaluation, affine") {
  auto b = verify::make_bundle("ag:3:3");
  const Instance inst = Corpus::builtin().instantiate(b->params());
  DslEvaluator dsl(inst, b->model);
  const auto [k1, k2] = lig::test::find_pair(b->space, [&](LineId p, LineId q) { return lig::test::is_skew(b->space, p, q); });
  CHECK(dsl.eval("Pi", {k1, k2}).is_false());

  auto a = verify::make_bundle("ag:3:2");
  const Instance ia = Corpus::builtin().instantiate(a->params());
  DslEvaluator da(ia, a->model, DslOptions{4'000'000'000, true});
  CHECK(da.eval("Alpha", {}).is_true());
}
