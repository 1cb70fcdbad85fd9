#include "lig/verify/registry.hpp"

#include <algorithm>

#include "lig/geometry/model_bridge.hpp"
#include "lig/geometry/oracles.hpp"

namespace lig::verify {

using geometry::Space;
using pred::EvalResult;
using pred::Evaluator;

SpaceBundle::SpaceBundle(const SpaceParams& p, std::uint64_t seed)
    : space(Space::build(p.kind, p.n, p.q)),
      model(geometry::model_from_space(space)),
      table(model),
      provider(witness::GuidedContext{space, model, seed}) {}

std::unique_ptr<SpaceBundle> make_bundle(const std::string& label, std::uint64_t seed) {
  return std::make_unique<SpaceBundle>(parse_space_label(label), seed);
}

namespace {

bool eq_or_disjoint(const Space& s, Args a) { return a[0] == a[1] || geometry::oracle_disjoint(s, a[0], a[1]); }

pred::Triple triple(Args a, std::size_t off) { return {a[off], a[off + 1], a[off + 2]}; }

std::vector<PredicateSpec> build() {
  std::vector<PredicateSpec> r;
  auto add = [&](PredicateSpec s) { r.push_back(std::move(s)); };
  auto arity = [](unsigned k) { return [k](const SpaceParams&) { return k; }; };

  auto any = [](const SpaceParams& p) { return p.n >= 3; };
  auto proj_even = [](const SpaceParams& p) { return p.projective() && p.n >= 4 && p.n % 2 == 0; };
  auto proj_odd = [](const SpaceParams& p) { return p.projective() && p.n >= 5 && p.n % 2 == 1; };
  auto proj_ge4 = [](const SpaceParams& p) { return p.projective() && p.n >= 4; };
  auto proj3 = [](const SpaceParams& p) { return p.projective() && p.n == 3; };
  auto affine = [](const SpaceParams& p) { return p.affine() && p.n >= 3; };
  auto affine_q3 = [](const SpaceParams& p) { return p.affine() && p.n >= 3 && p.q >= 3; };
  auto delta0_ok = [](const SpaceParams& p) { return p.affine() && p.n >= 4 && p.n % 2 == 0 && p.q >= 3; };
  auto delta1_ok = [](const SpaceParams& p) { return p.affine() && p.n >= 3 && p.n % 2 == 1; };
  auto notsim_aff_ok = [=](const SpaceParams& p) { return delta1_ok(p) || delta0_ok(p); };

  add({"s", "concurrent", "any n>=3", Source::Lines, Symmetry::Full, false, any, arity(3),
       [](Evaluator& e, Args a) { return e.s(a[0], a[1], a[2]); },
       [](const Space& s, Args a) { return geometry::oracle_concurrent(s, a[0], a[1], a[2]); }});
  add({"sbar", "in_pencil", "any n>=3", Source::Lines, Symmetry::FirstTwo, false, any, arity(3),
       [](Evaluator& e, Args a) { return e.sbar(a[0], a[1], a[2]); },
       [](const Space& s, Args a) { return geometry::oracle_in_pencil(s, a[0], a[1], a[2]); }});
  add({"hash", "meet_diff", "any n>=3", Source::Lines, Symmetry::None, false, any, arity(4),
       [](Evaluator& e, Args a) { return e.hash(a[0], a[1], a[2], a[3]); },
       [](const Space& s, Args a) { return geometry::oracle_meet_diff(s, a[0], a[1], a[2], a[3]); }});
  add({"neq", "id_inequality", "any n>=3", Source::Lines, Symmetry::None, false, any, arity(2),
       [](Evaluator& e, Args a) { return e.neq(a[0], a[1]); }, [](const Space&, Args a) { return a[0] != a[1]; }});

  add({"notsim_even", "equal_or_disjoint", "projective n>=4 even", Source::Lines, Symmetry::None, false, proj_even,
       arity(2), [](Evaluator& e, Args a) { return e.notsim_even(a[0], a[1]); }, eq_or_disjoint});
  add({"notsim_odd", "equal_or_disjoint", "projective n>=5 odd", Source::Lines, Symmetry::None, false, proj_odd,
       arity(2), [](Evaluator& e, Args a) { return e.notsim_odd(a[0], a[1]); }, eq_or_disjoint});
  add({"notsim_proj", "equal_or_disjoint", "projective n>=4", Source::Lines, Symmetry::None, false, proj_ge4,
       arity(2), [](Evaluator& e, Args a) { return e.notsim_proj(a[0], a[1]); }, eq_or_disjoint});

  add({"t", "triangle_or_tripod", "projective n==3", Source::Lines, Symmetry::None, false, proj3, arity(3),
       [](Evaluator& e, Args a) { return e.t(a[0], a[1], a[2]); },
       [](const Space& s, Args a) { return geometry::oracle_t(s, a[0], a[1], a[2]); }});
  add({"equiv_plus", "same_carrier_or_vertex", "projective n==3", Source::TriplePairs, Symmetry::None, false, proj3,
       arity(6), [](Evaluator& e, Args a) { return e.equiv_plus(triple(a, 0), triple(a, 3)); },
       [](const Space& s, Args a) { return geometry::oracle_equiv_plus(s, a.data(), a.data() + 3); }});
  add({"equiv_minus", "carrier_vertex_incidence", "projective n==3", Source::TriplePairs, Symmetry::None, false,
       proj3, arity(6), [](Evaluator& e, Args a) { return e.equiv_minus(triple(a, 0), triple(a, 3)); },
       [](const Space& s, Args a) { return geometry::oracle_equiv_minus(s, a.data(), a.data() + 3); }});
  add({"equiv_oplus", "shared_plane_or_point", "projective n==3", Source::TriplePairs, Symmetry::None, false, proj3,
       arity(6), [](Evaluator& e, Args a) { return e.equiv_oplus(triple(a, 0), triple(a, 3)); },
       [](const Space& s, Args a) { return geometry::oracle_equiv_oplus(s, a.data(), a.data() + 3); }});
  add({"equiv_oplus_strict", "shared_plane_or_point", "projective n==3", Source::TriplePairs, Symmetry::None, true,
       proj3, arity(6), [](Evaluator& e, Args a) { return e.equiv_oplus_strict(triple(a, 0), triple(a, 3)); },
       [](const Space& s, Args a) { return geometry::oracle_equiv_oplus(s, a.data(), a.data() + 3); }});
  add({"sigma", "skew", "projective n==3", Source::Lines, Symmetry::None, false, proj3, arity(2),
       [](Evaluator& e, Args a) { return e.sigma(a[0], a[1]); },
       [](const Space& s, Args a) { return geometry::oracle_skew(s, a[0], a[1]); }});
  add({"notsim3", "equal_or_disjoint", "projective n==3", Source::Lines, Symmetry::None, false, proj3, arity(2),
       [](Evaluator& e, Args a) { return e.notsim3(a[0], a[1]); }, eq_or_disjoint});

  add({"alpha", "q==2", "affine n>=3", Source::Nullary, Symmetry::None, false, affine, arity(0),
       [](Evaluator& e, Args) { return e.alpha(); }, [](const Space& s, Args) { return s.params().q == 2; }});
  add({"beta", "q>=3", "affine n>=3", Source::Nullary, Symmetry::None, false, affine, arity(0),
       [](Evaluator& e, Args) { return e.beta(); }, [](const Space& s, Args) { return s.params().q >= 3; }});
  add({"beta_literal", "q>=3", "affine n>=3", Source::Nullary, Symmetry::None, true, affine, arity(0),
       [](Evaluator& e, Args) { return e.beta_literal(); }, [](const Space& s, Args) { return s.params().q >= 3; }});
  add({"gamma", "equal_or_disjoint", "affine n>=3", Source::Lines, Symmetry::None, false, affine, arity(2),
       [](Evaluator& e, Args a) { return e.gamma(a[0], a[1]); }, eq_or_disjoint});
  add({"pi", "coplanar", "affine n>=3 q>=3", Source::Lines, Symmetry::None, false, affine_q3, arity(2),
       [](Evaluator& e, Args a) { return e.pi(a[0], a[1]); },
       [](const Space& s, Args a) { return geometry::oracle_coplanar(s, a[0], a[1]); }});

  // M and M_r take the m lines a_1..a_m, then x.
  auto m_arity = [](const SpaceParams& p) { return p.m + 1; };
  auto head = [](Args a) { return std::vector<LineId>(a.begin(), a.end() - 1); };
  add({"m", "equal_or_meets_two_apart", "affine n>=3", Source::Lines, Symmetry::None, false, affine, m_arity,
       [=](Evaluator& e, Args a) { return e.m(head(a), a.back()); },
       [](const Space& s, Args a) {
         const LineId x = a.back();
         for (std::size_t i = 0; i + 1 < a.size(); ++i)
           if (a[i] == x) return true;
         for (std::size_t i = 0; i + 1 < a.size(); ++i)
           for (std::size_t j = i + 1; j + 1 < a.size(); ++j)
             if (geometry::oracle_meet_diff(s, a[i], x, a[j], x)) return true;
         return false;
       }});
  add({"mq", "in_span", "affine n>=3", Source::Lines, Symmetry::None, false, affine, m_arity,
       [=](Evaluator& e, Args a) { return e.mq(head(a), e.model().params().r, a.back()); },
       [=](const Space& s, Args a) {
         std::vector<LineId> all(a.begin(), a.end());
         return geometry::oracle_span_dim(s, all) == geometry::oracle_span_dim(s, head(a));
       }});
  add({"delta0", "equal_or_disjoint", "affine n>=4 even q>=3", Source::Lines, Symmetry::None, false, delta0_ok,
       arity(2), [](Evaluator& e, Args a) { return e.delta0(a[0], a[1]); }, eq_or_disjoint});
  add({"delta1", "equal_or_disjoint", "affine n>=3 odd", Source::Lines, Symmetry::None, false, delta1_ok, arity(2),
       [](Evaluator& e, Args a) { return e.delta1(a[0], a[1]); }, eq_or_disjoint});
  add({"notsim_affine", "equal_or_disjoint", "affine n>=3 odd | affine n>=4 even q>=3", Source::Lines,
       Symmetry::None, false, notsim_aff_ok, arity(2),
       [](Evaluator& e, Args a) { return e.notsim_affine(a[0], a[1]); }, eq_or_disjoint});
  return r;
}

}  // namespace

const std::vector<PredicateSpec>& registry() {
  static const std::vector<PredicateSpec> r = build();
  return r;
}

const PredicateSpec& find_predicate(const std::string& name) {
  for (const auto& s : registry())
    if (s.name == name) return s;
  std::string known;
  for (const auto& s : registry()) known += (known.empty() ? "" : ", ") + s.name;
  throw Error(ErrorCode::Usage, "unknown predicate '" + name + "' (known: " + known + ")");
}

std::vector<std::string> predicate_names() {
  std::vector<std::string> out;
  for (const auto& s : registry()) out.push_back(s.name);
  return out;
}

void require_guard(const PredicateSpec& spec, const SpaceParams& p) {
  if (!spec.admits(p))
    throw Error(ErrorCode::GuardMismatch, spec.name + " is defined for " + spec.guard_text + ", not " + p.label());
}

}  // namespace lig::verify
