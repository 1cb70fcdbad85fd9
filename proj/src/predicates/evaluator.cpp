#include "lig/predicates/evaluator.hpp"

#include <algorithm>
#include <functional>

namespace lig::pred {

// Default provider: no suggestions anywhere.
std::optional<std::vector<LineId>> WitnessProvider::proj_extension(LineId, LineId) const { return std::nullopt; }
std::optional<std::vector<LineId>> WitnessProvider::proj_chain_even(const std::vector<LineId>&, LineId,
                                                                    LineId) const {
  return std::nullopt;
}
std::optional<std::pair<std::vector<LineId>, std::vector<LineId>>> WitnessProvider::proj_chain_odd(
    const std::vector<LineId>&, LineId, LineId) const {
  return std::nullopt;
}
std::vector<LineId> WitnessProvider::proj_refutation_order(const std::vector<LineId>&, LineId) const { return {}; }
std::optional<Triple> WitnessProvider::t_witness(const Triple&, LineId, LineId) const { return std::nullopt; }
std::optional<std::array<LineId, 6>> WitnessProvider::equiv_plus_witness(const Triple&, const Triple&,
                                                                         LineId) const {
  return std::nullopt;
}
std::optional<std::pair<LineId, LineId>> WitnessProvider::equiv_minus_witness(const Triple&, const Triple&,
                                                                              LineId) const {
  return std::nullopt;
}
std::optional<Triple> WitnessProvider::equiv_oplus_witness(const Triple&, const Triple&) const { return std::nullopt; }
std::optional<std::array<LineId, 5>> WitnessProvider::sigma_witness(LineId, LineId, LineId) const {
  return std::nullopt;
}
std::optional<std::vector<LineId>> WitnessProvider::affine_extension(LineId, LineId) const { return std::nullopt; }
std::optional<std::vector<LineId>> WitnessProvider::mr_chain(const std::vector<LineId>&, LineId, unsigned) const {
  return std::nullopt;
}
std::optional<LineId> WitnessProvider::delta0_partner(const std::vector<LineId>&, LineId) const {
  return std::nullopt;
}

const char* to_string(Mode m) {
  switch (m) {
    case Mode::Blind: return "blind";
    case Mode::Guided: return "guided";
    case Mode::GuidedThenBlind: return "guided-then-blind";
  }
  return "?";
}

Mode parse_mode(const std::string& s) {
  if (s == "blind") return Mode::Blind;
  if (s == "guided") return Mode::Guided;
  if (s == "guided-then-blind" || s == "guided_then_blind") return Mode::GuidedThenBlind;
  throw Error(ErrorCode::Usage, "unknown mode '" + s + "' (blind, guided, guided-then-blind)");
}

Triple sorted(Triple t) {
  std::sort(t.begin(), t.end());
  return t;
}

Evaluator::Evaluator(const PredicateTable& table, EvalBudget budget, const WitnessProvider* provider)
    : tab_(table), m_(table.model()), budget_(budget), provider_(provider) {}

void Evaluator::begin() {
  nodes_ = 0;
  exhausted_ = false;
  incomplete_ = false;
  wit_.clear();
  note_.clear();
}

EvalResult Evaluator::finish(Tri v) {
  EvalResult r;
  if (v == Tri::True)
    r.value = Tri::True;
  else if (v == Tri::Unknown || !settled())
    r.value = Tri::Unknown;
  else
    r.value = Tri::False;
  r.nodes_used = nodes_;
  if (r.value == Tri::True) r.witnesses = wit_;
  r.note = note_;
  if (exhausted_ && r.value == Tri::Unknown) r.note += (r.note.empty() ? "" : "; ") + std::string("budget exhausted");
  return r;
}

bool Evaluator::tick(std::uint64_t n) {
  if (exhausted_) return false;
  nodes_ += n;
  if (nodes_ > budget_.max_nodes) {
    exhausted_ = true;
    return false;
  }
  return true;
}

void Evaluator::guard_any() const {
  if (m_.params().n < 3) throw Error(ErrorCode::WrongDimension, "needs n >= 3");
}

void Evaluator::guard_proj_even() const {
  const auto& p = m_.params();
  if (!p.projective() || p.n < 4 || p.n % 2 != 0)
    throw Error(ErrorCode::WrongDimension, "even definition needs projective n >= 4, n even; got " + p.label());
}

void Evaluator::guard_proj_odd() const {
  const auto& p = m_.params();
  if (!p.projective() || p.n < 5 || p.n % 2 != 1)
    throw Error(ErrorCode::WrongDimension, "odd definition needs projective n >= 5, n odd; got " + p.label());
}

void Evaluator::guard_proj3() const {
  const auto& p = m_.params();
  if (!p.projective() || p.n != 3)
    throw Error(ErrorCode::WrongDimension, "three-space predicates need projective n = 3; got " + p.label());
  if (m_.line_count() > 1024) throw Error(ErrorCode::ModelTooLarge, "three-space memo keys hold at most 1024 lines");
}

void Evaluator::guard_affine() const {
  if (!m_.params().affine())
    throw Error(ErrorCode::WrongDimension, "affine predicate on " + m_.params().label());
}

LineSet Evaluator::closed_common(std::initializer_list<LineId> ls) const {
  LineSet s = m_.universe();
  for (LineId l : ls) s &= m_.closed_neighbors(l);
  return s;
}

// low-level predicates

EvalResult Evaluator::s(LineId a1, LineId a2, LineId a3) {
  guard_any();
  check(a1), check(a2), check(a3);
  begin();
  tick();
  const bool v = tab_.s(a1, a2, a3);
  if (v) {
    // h for g = line 0
    const LineId abc[3] = {a1, a2, a3};
    LineSet c = m_.common_neighbors(abc);
    c.and_words(m_.row(0));
    wit_ = {{"g", 0}, {"h", c.first()}};
  }
  return finish(tri(v));
}

EvalResult Evaluator::sbar(LineId a, LineId b, LineId c) {
  guard_any();
  check(a), check(b), check(c);
  begin();
  tick();
  return finish(tri(tab_.sbar(a, b, c)));
}

EvalResult Evaluator::hash(LineId a1, LineId b1, LineId a2, LineId b2) {
  guard_any();
  check(a1), check(b1), check(a2), check(b2);
  begin();
  tick();
  return finish(tri(tab_.hash(a1, b1, a2, b2)));
}

Tri Evaluator::neq_(LineId a, LineId b) {
  // (exists g) ag # bg
  LineSet cand = m_.neighbors(a);
  cand.and_words(m_.row(b));
  bool found = cand.any_of([&](LineId g) {
    if (!tick()) return true;
    if (tab_.hash(a, g, b, g)) {
      wit_.push_back({"g", g});
      return true;
    }
    return false;
  });
  if (exhausted_) return Tri::Unknown;
  return tri(found);
}

EvalResult Evaluator::neq(LineId a, LineId b) {
  guard_any();
  check(a), check(b);
  begin();
  return finish(neq_(a, b));
}

// projective, n >= 4

namespace {

// Lazily filled membership in the chain-end sets R_i of the projective
// definitions: R_1 = {b_1}, and b is in R_i iff b ~ a_{i-1} and some b' in
// R_{i-1} satisfies b a_{i-1} # b b'.
class Reach {
 public:
  Reach(const PredicateTable& t, const std::vector<LineId>& a, LineId b1, std::function<bool()> tick)
      : t_(t), m_(t.model()), a_(a), b1_(b1), tick_(std::move(tick)),
        state_((a.size() + 2) * t.model().line_count(), 0) {}

  // i in 1..m+1
  bool in(std::size_t i, LineId b) {
    if (i == 1) return b == b1_;
    std::uint8_t& st = state_[i * m_.line_count() + b];
    if (st) return st == 1;
    const LineId prev_a = a_[i - 2];
    bool ok = false;
    if (b != prev_a && m_.sim(b, prev_a)) {
      LineSet cand = m_.neighbors(b);
      if (i - 1 >= 2) cand.and_words(m_.row(a_[i - 3]));
      ok = cand.any_of([&](LineId bp) {
        if (!in(i - 1, bp)) return false;
        if (!tick_()) return false;
        return t_.hash(b, prev_a, b, bp);
      });
    }
    if (ok || !aborted()) st = ok ? 1 : 2;
    return ok;
  }

  void set_aborted_probe(std::function<bool()> f) { aborted_ = std::move(f); }

 private:
  bool aborted() const { return aborted_ && aborted_(); }

  const PredicateTable& t_;
  const IntersectionModel& m_;
  const std::vector<LineId>& a_;
  LineId b1_;
  std::function<bool()> tick_;
  std::function<bool()> aborted_;
  std::vector<std::uint8_t> state_;
};

}  // namespace

Tri Evaluator::proj_with_a_(const std::vector<LineId>& a, LineId b1, bool odd, bool record) {
  const std::size_t m = a.size();
  Reach reach(tab_, a, b1, [this] { return tick(); });
  reach.set_aborted_probe([this] { return exhausted_; });

  std::vector<LineId> order;
  if (provider_ != nullptr) order = provider_->proj_refutation_order(a, b1);
  std::vector<std::uint8_t> seen(m_.line_count(), 0);
  for (LineId g : order) seen[g] = 1;
  for (LineId g = 0; g < m_.line_count(); ++g)
    if (!seen[g]) order.push_back(g);

  bool first = true;
  for (LineId g : order) {
    if (!tick()) return Tri::Unknown;
    LineSet ends = m_.neighbors(g);
    ends.and_words(m_.row(a[m - 1]));
    LineId wb = kNoLine, wc = kNoLine;
    bool ok;
    if (!odd) {
      // (exists b_2..b_{m+1}) chain & g ~ b_{m+1}
      ok = ends.any_of([&](LineId b) {
        if (reach.in(m + 1, b)) {
          wb = b;
          return true;
        }
        return false;
      });
    } else {
      // two chains from b_1 with b_{m+1} g # c_{m+1} g
      std::vector<LineId> hits;
      ends.for_each([&](LineId b) {
        if (reach.in(m + 1, b)) hits.push_back(b);
      });
      ok = false;
      for (std::size_t i = 0; i < hits.size() && !ok; ++i)
        for (std::size_t j = i + 1; j < hits.size() && !ok; ++j) {
          if (!tick()) break;
          if (tab_.hash(hits[i], g, hits[j], g)) {
            ok = true;
            wb = hits[i];
            wc = hits[j];
          }
        }
    }
    if (exhausted_) return Tri::Unknown;
    if (!ok) return Tri::False;
    if (record && first) {
      wit_.push_back({"g", g});
      wit_.push_back({"b" + std::to_string(m + 1), wb});
      if (odd) wit_.push_back({"c" + std::to_string(m + 1), wc});
    }
    first = false;
  }
  return Tri::True;
}

Tri Evaluator::proj_guided_(const std::vector<LineId>& a, LineId b1, bool odd) {
  const std::size_t m = a.size();
  auto chain_ok = [&](const std::vector<LineId>& ch) {
    if (ch.size() != m) return false;
    LineId prev = b1;
    for (std::size_t i = 0; i < m; ++i) {
      check(ch[i]);
      if (!tick() || !tab_.hash(ch[i], a[i], ch[i], prev)) return false;
      prev = ch[i];
    }
    return true;
  };
  for (LineId g = 0; g < m_.line_count(); ++g) {
    if (!tick()) return Tri::Unknown;
    bool ok = false;
    if (!odd) {
      auto ch = provider_->proj_chain_even(a, b1, g);
      ok = ch && chain_ok(*ch) && m_.sim(g, ch->back());
    } else {
      auto ch = provider_->proj_chain_odd(a, b1, g);
      ok = ch && chain_ok(ch->first) && chain_ok(ch->second) && tick() &&
           tab_.hash(ch->first.back(), g, ch->second.back(), g);
    }
    if (!ok) return Tri::Unknown;
  }
  return Tri::True;
}

Tri Evaluator::notsim_proj_(LineId a1, LineId b1, bool odd) {
  if (m_.eq(a1, b1)) return Tri::True;
  const std::size_t m = m_.params().m;
  auto record_a = [&](const std::vector<LineId>& a) {
    for (std::size_t i = 1; i < a.size(); ++i) wit_.push_back({"a" + std::to_string(i + 1), a[i]});
  };

  if (guided()) {
    auto ext = provider_->proj_extension(a1, b1);
    if (ext && ext->size() == m - 1) {
      std::vector<LineId> a{a1};
      a.insert(a.end(), ext->begin(), ext->end());
      for (LineId x : a) check(x);
      if (proj_guided_(a, b1, odd) == Tri::True) {
        record_a(a);
        note_ = "guided";
        return Tri::True;
      }
    }
    if (budget_.mode == Mode::Guided) {
      incomplete_ = true;
      return Tri::Unknown;
    }
  }

  // Blind: every tuple a_2..a_m.
  std::vector<LineId> a(m, 0);
  a[0] = a1;
  while (true) {
    const Tri v = proj_with_a_(a, b1, odd, true);
    if (v == Tri::True) {
      record_a(a);
      return Tri::True;
    }
    wit_.clear();
    if (exhausted_) return Tri::Unknown;
    std::size_t i = 1;
    while (i < m && ++a[i] == m_.line_count()) a[i++] = 0;
    if (i >= m) break;
  }
  return Tri::False;
}

EvalResult Evaluator::notsim_even(LineId a1, LineId b1) {
  guard_proj_even();
  check(a1), check(b1);
  begin();
  return finish(notsim_proj_(a1, b1, false));
}

EvalResult Evaluator::notsim_odd(LineId a1, LineId b1) {
  guard_proj_odd();
  check(a1), check(b1);
  begin();
  return finish(notsim_proj_(a1, b1, true));
}

EvalResult Evaluator::notsim_proj(LineId a1, LineId b1) {
  return m_.params().n % 2 == 0 ? notsim_even(a1, b1) : notsim_odd(a1, b1);
}

}  // namespace lig::pred
