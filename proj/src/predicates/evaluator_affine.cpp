// Affine definitions: alpha, beta, gamma, pi, M, M_q, delta_0, delta_1.

#include <algorithm>
#include <set>

#include "lig/predicates/clique.hpp"
#include "lig/predicates/evaluator.hpp"

namespace lig::pred {

bool Evaluator::alpha_() const {
  // (forall x_1..x_{k+1}) some x_i = x_j, i.e. at most k lines
  return m_.line_count() <= m_.params().k;
}

EvalResult Evaluator::alpha() {
  guard_affine();
  begin();
  tick();
  return finish(tri(alpha_()));
}

Tri Evaluator::beta_(std::vector<LineId>* wit) {
  // (exists x_1..x_{2^n}) pairwise x_i ~ x_j
  const std::size_t need = std::size_t{1} << m_.params().n;
  if (need > m_.line_count()) return Tri::False;
  // A pencil is the natural candidate; re-check it pairwise before use.
  LineId a = 0;
  while (a < m_.line_count() && m_.degree(a) == 0) ++a;
  if (a < m_.line_count()) {
    const LineSet p = tab_.pencil(a, m_.neighbors(a).first());
    std::vector<LineId> clique;
    p.for_each([&](LineId x) {
      bool ok = true;
      for (LineId y : clique) ok = ok && m_.sim(x, y);
      if (ok) clique.push_back(x);
    });
    tick(clique.size());
    if (clique.size() >= need) {
      clique.resize(need);
      if (wit) *wit = clique;
      note_ = "pencil witness";
      return Tri::True;
    }
  }
  const std::uint64_t left = budget_.max_nodes > nodes_ ? budget_.max_nodes - nodes_ : 0;
  const CliqueResult r = clique_at_least(m_, need, left);
  tick(r.nodes);
  if (!r.complete) {
    exhausted_ = true;
    return Tri::Unknown;
  }
  if (r.found) {
    if (wit) *wit = r.clique;
    note_ = "clique search";
    return Tri::True;
  }
  return Tri::False;
}

EvalResult Evaluator::beta() {
  guard_affine();
  begin();
  std::vector<LineId> w;
  const Tri v = beta_(&w);
  for (std::size_t i = 0; i < w.size(); ++i) wit_.push_back({"x" + std::to_string(i + 1), w[i]});
  return finish(v);
}

EvalResult Evaluator::beta_literal() {
  guard_affine();
  begin();
  // (exists x_1..x_{2^n}) some x_i ~ x_j: any intersecting pair will do
  for (LineId a = 0; a < m_.line_count(); ++a) {
    if (!tick()) break;
    const LineId b = m_.neighbors(a).first();
    if (b != kNoLine) {
      wit_ = {{"x1", a}, {"x2", b}};
      note_ = "literal disjunctive reading";
      return finish(Tri::True);
    }
  }
  return finish(Tri::False);
}

Tri Evaluator::gamma_(LineId a1, LineId a2) {
  // a1 = a2 | (alpha & (exists b1 b2) b1 != b2 & a1b1 # a2b1 & a1b2 # a2b2)
  if (m_.eq(a1, a2)) return Tri::True;
  if (!alpha_()) return Tri::False;
  LineSet cand = m_.neighbors(a1);
  cand.and_words(m_.row(a2));
  std::vector<LineId> bs;
  cand.for_each([&](LineId b) {
    if (tick() && tab_.hash(a1, b, a2, b)) bs.push_back(b);
  });
  if (exhausted_) return Tri::Unknown;
  for (std::size_t i = 0; i < bs.size(); ++i)
    for (std::size_t j = i + 1; j < bs.size(); ++j) {
      const std::size_t mark = wit_.size();
      const Tri v = neq_(bs[i], bs[j]);
      if (v == Tri::True) {
        wit_.resize(mark);
        wit_.push_back({"b1", bs[i]});
        wit_.push_back({"b2", bs[j]});
        return Tri::True;
      }
      if (v == Tri::Unknown) return Tri::Unknown;
    }
  return Tri::False;
}

EvalResult Evaluator::gamma(LineId a1, LineId a2) {
  guard_affine();
  check(a1), check(a2);
  begin();
  return finish(gamma_(a1, a2));
}

Tri Evaluator::pi_(LineId a, LineId b) {
  // (exists c d e) S(acd) & S(bce) & d ~ b & d ~ e & e ~ a
  LineSet cs = m_.neighbors(a);
  cs.and_words(m_.row(b));
  LineId wc = kNoLine, wd = kNoLine, we = kNoLine;
  const bool hit = cs.any_of([&](LineId c) {
    if (!tick()) return true;
    LineSet d = tab_.s_set(a, c);
    d.and_words(m_.row(b));
    if (d.empty()) return false;
    LineSet e = tab_.s_set(b, c);
    e.and_words(m_.row(a));
    return d.any_of([&](LineId dd) {
      LineSet ee = e;
      ee.and_words(m_.row(dd));
      if (ee.empty()) return false;
      wc = c;
      wd = dd;
      we = ee.first();
      return true;
    });
  });
  if (exhausted_) return Tri::Unknown;
  if (hit) {
    wit_.push_back({"c", wc});
    wit_.push_back({"d", wd});
    wit_.push_back({"e", we});
  }
  return tri(hit);
}

EvalResult Evaluator::pi(LineId a, LineId b) {
  guard_affine();
  if (m_.params().q < 3) throw Error(ErrorCode::WrongDimension, "coplanarity definition assumes q >= 3");
  check(a), check(b);
  begin();
  return finish(pi_(a, b));
}

bool Evaluator::m_matrix_(const std::vector<LineId>& list, LineId x) {
  // x is one of the list, or meets two of them in different points
  for (LineId l : list)
    if (m_.eq(x, l)) return true;
  for (std::size_t i = 0; i < list.size(); ++i) {
    if (!m_.sim(list[i], x)) continue;
    for (std::size_t j = i + 1; j < list.size(); ++j) {
      if (!m_.sim(list[j], x)) continue;
      if (!tick()) return false;
      if (tab_.hash(list[i], x, list[j], x)) return true;
    }
  }
  return false;
}

EvalResult Evaluator::m(const std::vector<LineId>& a, LineId x) {
  guard_affine();
  for (LineId l : a) check(l);
  check(x);
  begin();
  return finish(tri(m_matrix_(a, x)));
}

Tri Evaluator::mq_blind_(std::vector<LineId>& list, std::size_t base, unsigned steps_left, LineId x,
                         std::vector<LineId>* chain) {
  if (!tick()) return Tri::Unknown;
  if (m_matrix_(list, x)) {
    if (chain) chain->assign(list.begin() + static_cast<std::ptrdiff_t>(base), list.end());
    return Tri::True;
  }
  if (steps_left == 0) return Tri::False;
  // Stalling steps (b_i equal to an earlier line) add nothing, so only
  // fresh lines meeting two listed lines are tried.
  LineSet seen(m_.line_count());
  for (LineId l : list) seen.set(l);
  LineSet cand(m_.line_count());
  for (std::size_t i = 0; i < list.size(); ++i)
    for (std::size_t j = i + 1; j < list.size(); ++j) {
      LineSet c = m_.neighbors(list[i]);
      c.and_words(m_.row(list[j]));
      cand |= c;
    }
  cand -= seen;
  std::vector<LineId> key(list.begin() + static_cast<std::ptrdiff_t>(base), list.end());
  std::sort(key.begin(), key.end());
  bool found = false;
  cand.any_of([&](LineId y) {
    if (exhausted_) return true;
    if (!m_matrix_(list, y)) return false;
    // sets already explored with at least this many steps left are skipped
    std::vector<LineId> k2 = key;
    k2.insert(std::upper_bound(k2.begin(), k2.end(), y), y);
    auto [it, fresh] = mq_seen_.emplace(std::move(k2), steps_left - 1);
    if (!fresh) {
      if (it->second >= steps_left - 1) return false;
      it->second = steps_left - 1;
    }
    list.push_back(y);
    const Tri v = mq_blind_(list, base, steps_left - 1, x, chain);
    list.pop_back();
    if (v == Tri::True) found = true;
    return found;
  });
  if (found) return Tri::True;
  return exhausted_ ? Tri::Unknown : Tri::False;
}

Tri Evaluator::mq_guided_(const std::vector<LineId>& a, unsigned steps, LineId x, std::vector<LineId>* chain) {
  auto ch = provider_->mr_chain(a, x, steps);
  if (!ch || ch->size() > steps) return Tri::Unknown;
  std::vector<LineId> list = a;
  for (LineId b : *ch) {
    check(b);
    if (!m_matrix_(list, b)) return Tri::Unknown;
    list.push_back(b);
  }
  if (!m_matrix_(list, x)) return Tri::Unknown;
  max_chain_ = std::max<unsigned>(max_chain_, static_cast<unsigned>(ch->size()));
  if (chain) *chain = *ch;
  return Tri::True;
}

Tri Evaluator::mq_(const std::vector<LineId>& a, unsigned steps, LineId x, std::vector<LineId>* chain) {
  // (exists b_1..b_q) M(a b_1..b_{i-1} b_i) for each i, and M(a b_1..b_q x)
  if (guided()) {
    const Tri v = mq_guided_(a, steps, x, chain);
    if (v == Tri::True) return v;
    if (budget_.mode == Mode::Guided) {
      incomplete_ = true;
      return Tri::Unknown;
    }
  }
  std::vector<LineId> list = a;
  mq_seen_.clear();
  return mq_blind_(list, a.size(), steps, x, chain);
}

EvalResult Evaluator::mq(const std::vector<LineId>& a, unsigned steps, LineId x) {
  guard_affine();
  for (LineId l : a) check(l);
  check(x);
  begin();
  std::vector<LineId> chain;
  const Tri v = mq_(a, steps, x, &chain);
  if (v == Tri::True) {
    while (chain.size() < steps) chain.push_back(a.front());  // stall steps
    for (std::size_t i = 0; i < chain.size(); ++i) wit_.push_back({"b" + std::to_string(i + 1), chain[i]});
  }
  return finish(v);
}

Tri Evaluator::delta_with_a_(const std::vector<LineId>& a, bool odd) {
  const unsigned r = m_.params().r;
  mq_memo_.clear();
  auto reach = [&](LineId h) -> Tri {
    if (auto it = mq_memo_.find(h); it != mq_memo_.end()) return tri(it->second);
    const Tri v = mq_(a, r, h, nullptr);
    if (v != Tri::Unknown && settled()) mq_memo_.emplace(h, v == Tri::True);
    return v;
  };
  for (LineId g = 0; g < m_.line_count(); ++g) {
    if (!tick()) return Tri::Unknown;
    if (odd) {
      // (forall g) M_r(a_1..a_m g)
      const Tri v = reach(g);
      if (v != Tri::True) return exhausted_ || incomplete_ ? Tri::Unknown : Tri::False;
      continue;
    }
    // (forall g)(exists h) pi(gh) & M_r(a_1..a_m h)
    bool ok = false;
    if (guided()) {
      if (auto h = provider_->delta0_partner(a, g)) {
        check(*h);
        ok = pi_(g, *h) == Tri::True && reach(*h) == Tri::True;
      }
      if (!ok && budget_.mode == Mode::Guided) {
        incomplete_ = true;
        return Tri::Unknown;
      }
    }
    for (LineId h = 0; h < m_.line_count() && !ok; ++h) {
      if (exhausted_) return Tri::Unknown;
      if (pi_(g, h) != Tri::True) continue;
      ok = reach(h) == Tri::True;
    }
    if (!ok) return exhausted_ || incomplete_ ? Tri::Unknown : Tri::False;
  }
  return Tri::True;
}

Tri Evaluator::delta_(LineId a1, LineId a2, bool odd) {
  // a1 = a2 | (beta & (exists a_3..a_m)(forall g) ...)
  if (m_.eq(a1, a2)) return Tri::True;
  const Tri b = beta_(nullptr);
  if (b != Tri::True) return b;
  note_.clear();
  const std::size_t m = m_.params().m;
  if (m < 2) throw Error(ErrorCode::WrongDimension, "affine definition needs m >= 2");

  if (guided() && m > 2) {
    auto ext = provider_->affine_extension(a1, a2);
    if (ext && ext->size() == m - 2) {
      std::vector<LineId> a{a1, a2};
      a.insert(a.end(), ext->begin(), ext->end());
      if (delta_with_a_(a, odd) == Tri::True) {
        for (std::size_t i = 2; i < a.size(); ++i) wit_.push_back({"a" + std::to_string(i + 1), a[i]});
        return Tri::True;
      }
    }
    if (budget_.mode == Mode::Guided) {
      incomplete_ = true;
      return Tri::Unknown;
    }
  }

  std::vector<LineId> a(m, 0);
  a[0] = a1;
  a[1] = a2;
  while (true) {
    const Tri v = delta_with_a_(a, odd);
    if (v == Tri::True) {
      for (std::size_t i = 2; i < a.size(); ++i) wit_.push_back({"a" + std::to_string(i + 1), a[i]});
      return Tri::True;
    }
    if (exhausted_) return Tri::Unknown;
    std::size_t i = 2;
    while (i < m && ++a[i] == m_.line_count()) a[i++] = 0;
    if (i >= m) break;
  }
  return incomplete_ ? Tri::Unknown : Tri::False;
}

EvalResult Evaluator::delta0(LineId a1, LineId a2) {
  guard_affine();
  if (m_.params().n % 2 != 0) throw Error(ErrorCode::WrongDimension, "delta_0 needs n even");
  check(a1), check(a2);
  begin();
  return finish(delta_(a1, a2, false));
}

EvalResult Evaluator::delta1(LineId a1, LineId a2) {
  guard_affine();
  if (m_.params().n % 2 != 1) throw Error(ErrorCode::WrongDimension, "delta_1 needs n odd");
  check(a1), check(a2);
  begin();
  return finish(delta_(a1, a2, true));
}

EvalResult Evaluator::notsim_affine(LineId a1, LineId a2) {
  guard_affine();
  check(a1), check(a2);
  begin();
  // gamma | delta_{n mod 2}
  const Tri g = gamma_(a1, a2);
  if (g == Tri::True) {
    note_ = "gamma";
    return finish(g);
  }
  wit_.clear();
  const Tri d = delta_(a1, a2, m_.params().n % 2 == 1);
  if (d == Tri::True && note_.empty()) note_ = m_.params().n % 2 == 1 ? "delta_1" : "delta_0";
  return finish(g || d);
}

}  // namespace lig::pred
