// The three-dimensional stack: T, the three six-place relations, sigma.

#include "lig/predicates/evaluator.hpp"

namespace lig::pred {

namespace {

std::uint32_t key3(Triple t) {
  t = sorted(t);
  return (t[0] << 20) | (t[1] << 10) | t[2];
}

std::uint64_t key6(const Triple& a, const Triple& b) { return (std::uint64_t{key3(a)} << 30) | key3(b); }

std::uint64_t key6_sym(const Triple& a, const Triple& b) {
  const std::uint32_t x = key3(a), y = key3(b);
  return x <= y ? (std::uint64_t{x} << 30) | y : (std::uint64_t{y} << 30) | x;
}

}  // namespace

Tri Evaluator::t_(LineId a1, LineId a2, LineId a3) {
  const std::uint32_t key = key3({a1, a2, a3});
  if (auto it = t_memo_.find(key); it != t_memo_.end()) return tri(it->second);
  // (forall g1 g2)(exists x1 x2 x3) (g1,g2 ~ x1,x2,x3) & x_i ~= a_i,a_{i+1} &
  //   a_i ~ a_{i+1} & (x1 != x2 | x2 != x3 | x3 != x1)
  bool v = m_.sim(a1, a2) && m_.sim(a2, a3) && m_.sim(a3, a1);
  if (v) {
    const LineSet c[3] = {closed_common({a1, a2}), closed_common({a2, a3}), closed_common({a3, a1})};
    for (LineId g1 = 0; g1 < m_.line_count() && v; ++g1) {
      LineSet d[3] = {c[0], c[1], c[2]};
      for (auto& s : d) s.and_words(m_.row(g1));
      for (LineId g2 = g1; g2 < m_.line_count() && v; ++g2) {
        if (!tick()) return Tri::Unknown;
        LineSet x[3] = {d[0], d[1], d[2]};
        std::size_t sz[3];
        for (int i = 0; i < 3; ++i) {
          x[i].and_words(m_.row(g2));
          sz[i] = x[i].count();
        }
        if (sz[0] == 0 || sz[1] == 0 || sz[2] == 0) {
          v = false;
        } else if (sz[0] == 1 && sz[1] == 1 && sz[2] == 1 && x[0] == x[1] && x[1] == x[2]) {
          v = false;  // the only choice puts one line in all three slots
        }
      }
    }
  }
  t_memo_.emplace(key, v);
  return tri(v);
}

EvalResult Evaluator::t(LineId a1, LineId a2, LineId a3) {
  guard_proj3();
  check(a1), check(a2), check(a3);
  begin();
  Tri v = t_(a1, a2, a3);
  if (v == Tri::True) {
    const LineSet c[3] = {closed_common({a1, a2}), closed_common({a2, a3}), closed_common({a3, a1})};
    // instance g1 = g2 = 0
    LineId x[3];
    for (int i = 0; i < 3; ++i) x[i] = (c[i] & m_.neighbors(0)).first();
    if (x[0] == x[1] && x[1] == x[2]) {
      LineSet alt = c[0] & m_.neighbors(0);
      alt.reset(x[0]);
      x[0] = alt.first();
    }
    wit_ = {{"g1", 0}, {"g2", 0}, {"x1", x[0]}, {"x2", x[1]}, {"x3", x[2]}};
  }
  return finish(v);
}

bool Evaluator::plus_matrix_(const Triple& t1, const Triple& t2, LineId g, std::array<LineId, 6>* wit) {
  // x_{ij} ~= a_i,b_i,c_i,g ; x_{i1},x_{i2},x_{i3} pairwise distinct ;
  // x_{1j} ~= x_{2j}
  const LineSet y1 = closed_common({t1[0], t1[1], t1[2], g});
  const LineSet y2 = closed_common({t2[0], t2[1], t2[2], g});
  if (y1.count() < 3 || y2.count() < 3) return false;
  const auto ys = y1.to_vector();
  for (std::size_t i = 0; i < ys.size(); ++i)
    for (std::size_t j = i + 1; j < ys.size(); ++j)
      for (std::size_t k = j + 1; k < ys.size(); ++k) {
        const LineId y[3] = {ys[i], ys[j], ys[k]};
        LineSet z[3];
        for (int s = 0; s < 3; ++s) z[s] = y2 & m_.closed_neighbors(y[s]);
        // distinct representatives z_s in z[s]
        bool hit = z[0].any_of([&](LineId z0) {
          return z[1].any_of([&](LineId z1) {
            if (z1 == z0) return false;
            return z[2].any_of([&](LineId z2) {
              if (z2 == z0 || z2 == z1) return false;
              if (wit) *wit = {y[0], y[1], y[2], z0, z1, z2};
              return true;
            });
          });
        });
        if (hit) return true;
      }
  return false;
}

Tri Evaluator::plus_(const Triple& t1, const Triple& t2) {
  const std::uint64_t key = key6_sym(t1, t2);
  if (auto it = plus_memo_.find(key); it != plus_memo_.end()) return tri(it->second);
  bool v = t_(t1[0], t1[1], t1[2]) == Tri::True && t_(t2[0], t2[1], t2[2]) == Tri::True;
  for (LineId g = 0; g < m_.line_count() && v; ++g) {
    if (!tick()) return Tri::Unknown;
    v = plus_matrix_(t1, t2, g, nullptr);
  }
  if (exhausted_) return Tri::Unknown;
  plus_memo_.emplace(key, v);
  return tri(v);
}

Tri Evaluator::minus_(const Triple& t1, const Triple& t2) {
  const std::uint64_t key = key6_sym(t1, t2);
  if (auto it = minus_memo_.find(key); it != minus_memo_.end()) return tri(it->second);
  // (forall g)(exists x1 x2) x_i ~= a_i,b_i,c_i & T(a_i b_i c_i) &
  //   (g = x_1 | g = x_2 | a_1b_1c_1 =+ g x1 x2 | a_2b_2c_2 =+ g x1 x2)
  bool v = t_(t1[0], t1[1], t1[2]) == Tri::True && t_(t2[0], t2[1], t2[2]) == Tri::True;
  if (v) {
    const LineSet z1 = closed_common({t1[0], t1[1], t1[2]});
    const LineSet z2 = closed_common({t2[0], t2[1], t2[2]});
    for (LineId g = 0; g < m_.line_count() && v; ++g) {
      if (!tick()) return Tri::Unknown;
      if (z1.test(g) || z2.test(g)) continue;
      // the =+ disjuncts need g, x1, x2 pairwise intersecting
      LineSet c1 = z1;
      c1.and_words(m_.row(g));
      LineSet c2 = z2;
      c2.and_words(m_.row(g));
      v = c1.any_of([&](LineId x1) {
        return c2.any_of([&](LineId x2) {
          if (!m_.sim(x1, x2)) return false;
          const Triple gx{g, x1, x2};
          return plus_(t1, gx) == Tri::True || plus_(t2, gx) == Tri::True;
        });
      });
    }
  }
  if (exhausted_) return Tri::Unknown;
  minus_memo_.emplace(key, v);
  return tri(v);
}

Tri Evaluator::oplus_(const Triple& t1, const Triple& t2, bool strict) {
  const std::uint64_t key = key6(t1, t2);
  auto& memo = oplus_memo_[strict ? 1 : 0];
  if (auto it = memo.find(key); it != memo.end()) return tri(it->second);
  // (exists x1 x2 x3) t1 =+ t2 & x3 ~ (or ~=) the six lines & t1 =- x1x2x3 &
  //   x_i ~ a_i,b_i,c_i
  bool v = plus_(t1, t2) == Tri::True;
  if (v) {
    LineSet x3s = m_.universe();
    for (LineId l : {t1[0], t1[1], t1[2], t2[0], t2[1], t2[2]})
      x3s &= strict ? m_.neighbors(l) : m_.closed_neighbors(l);
    const LineId l1[3] = {t1[0], t1[1], t1[2]}, l2[3] = {t2[0], t2[1], t2[2]};
    const LineSet x1s = m_.common_neighbors(l1);
    const LineSet x2s = m_.common_neighbors(l2);
    v = x3s.any_of([&](LineId x3) {
      LineSet c1 = x1s;
      c1.and_words(m_.row(x3));
      LineSet c2 = x2s;
      c2.and_words(m_.row(x3));
      return c1.any_of([&](LineId x1) {
        return c2.any_of([&](LineId x2) {
          if (!tick()) return true;
          if (!m_.sim(x1, x2)) return false;
          return minus_(t1, {x1, x2, x3}) == Tri::True;
        });
      });
    });
  }
  if (exhausted_) return Tri::Unknown;
  memo.emplace(key, v);
  return tri(v);
}

EvalResult Evaluator::equiv_plus(const Triple& t1, const Triple& t2) {
  guard_proj3();
  for (LineId l : t1) check(l);
  for (LineId l : t2) check(l);
  begin();
  const Tri v = plus_(t1, t2);
  if (v == Tri::True) {
    std::array<LineId, 6> x{};
    plus_matrix_(t1, t2, 0, &x);
    wit_ = {{"g", 0}, {"x11", x[0]}, {"x12", x[1]}, {"x13", x[2]}, {"x21", x[3]}, {"x22", x[4]}, {"x23", x[5]}};
  }
  return finish(v);
}

EvalResult Evaluator::equiv_minus(const Triple& t1, const Triple& t2) {
  guard_proj3();
  for (LineId l : t1) check(l);
  for (LineId l : t2) check(l);
  begin();
  return finish(minus_(t1, t2));
}

EvalResult Evaluator::equiv_oplus(const Triple& t1, const Triple& t2) {
  guard_proj3();
  for (LineId l : t1) check(l);
  for (LineId l : t2) check(l);
  begin();
  if (guided()) {
    if (auto w = provider_->equiv_oplus_witness(t1, t2)) {
      const Triple x = *w;
      for (LineId l : x) check(l);
      bool ok = plus_(t1, t2) == Tri::True;
      for (LineId l : {t1[0], t1[1], t1[2], t2[0], t2[1], t2[2]}) ok = ok && closed_sim(x[2], l);
      for (LineId l : t1) ok = ok && m_.sim(x[0], l);
      for (LineId l : t2) ok = ok && m_.sim(x[1], l);
      ok = ok && minus_(t1, x) == Tri::True;
      if (ok) {
        wit_ = {{"x1", x[0]}, {"x2", x[1]}, {"x3", x[2]}};
        note_ = "guided";
        return finish(Tri::True);
      }
    }
    if (budget_.mode == Mode::Guided) return finish(Tri::Unknown);
  }
  return finish(oplus_(t1, t2, false));
}

EvalResult Evaluator::equiv_oplus_strict(const Triple& t1, const Triple& t2) {
  guard_proj3();
  for (LineId l : t1) check(l);
  for (LineId l : t2) check(l);
  begin();
  return finish(oplus_(t1, t2, true));
}

Tri Evaluator::sigma_good_(LineId a, LineId b, LineId x, std::array<LineId, 5>* wit) {
  // exists a1 a2 b1 b2 with aa_ix =+ bb_ix, aa_ix =(+) bb_ix, aa_1x =- aa_2x
  LineSet ca = m_.neighbors(a);
  ca.and_words(m_.row(x));
  LineSet cb = m_.neighbors(b);
  cb.and_words(m_.row(x));
  std::vector<std::pair<LineId, LineId>> ok;  // (a_i, b_i)
  ca.for_each([&](LineId ai) {
    cb.any_of([&](LineId bi) {
      if (!tick()) return true;
      const Triple ta{a, ai, x}, tb{b, bi, x};
      if (plus_(ta, tb) == Tri::True && oplus_(ta, tb, false) == Tri::True) {
        ok.emplace_back(ai, bi);
        return true;
      }
      return false;
    });
  });
  if (exhausted_) return Tri::Unknown;
  for (const auto& [a1, b1] : ok)
    for (const auto& [a2, b2] : ok) {
      if (!tick()) return Tri::Unknown;
      if (minus_({a, a1, x}, {a, a2, x}) == Tri::True) {
        if (wit) *wit = {x, a1, a2, b1, b2};
        return Tri::True;
      }
    }
  return exhausted_ ? Tri::Unknown : Tri::False;
}

Tri Evaluator::sigma_guided_(LineId a, LineId b, LineId g) {
  auto w = provider_->sigma_witness(a, b, g);
  if (!w) return Tri::Unknown;
  const auto [x, a1, a2, b1, b2] = *w;
  for (LineId l : *w) check(l);
  bool ok = m_.sim(x, a) && m_.sim(x, b) && closed_sim(x, g);
  for (auto [ai, bi] : {std::pair{a1, b1}, std::pair{a2, b2}}) {
    if (!ok) break;
    const Triple ta{a, ai, x}, tb{b, bi, x};
    ok = plus_(ta, tb) == Tri::True && oplus_(ta, tb, false) == Tri::True;
  }
  ok = ok && minus_({a, a1, x}, {a, a2, x}) == Tri::True;
  return ok ? Tri::True : Tri::Unknown;
}

Tri Evaluator::sigma_(LineId a, LineId b) {
  // (forall g)(exists x a1 a2 b1 b2) (x ~ a,b) & (x ~= g) & ...
  LineSet xs = m_.neighbors(a);
  xs.and_words(m_.row(b));
  if (xs.empty()) return Tri::False;
  std::vector<std::uint8_t> good(m_.line_count(), 0);  // 0 unknown, 1 yes, 2 no
  const bool use_provider = guided();
  for (LineId g = 0; g < m_.line_count(); ++g) {
    if (!tick()) return Tri::Unknown;
    if (use_provider) {
      const Tri v = sigma_guided_(a, b, g);
      if (v == Tri::True) continue;
      if (budget_.mode == Mode::Guided) {
        incomplete_ = true;
        return Tri::Unknown;
      }
    }
    LineSet cand = xs & m_.closed_neighbors(g);
    std::array<LineId, 5> w{};
    const bool hit = cand.any_of([&](LineId x) {
      if (good[x] == 0) {
        const Tri v = sigma_good_(a, b, x, &w);
        if (v == Tri::Unknown) return false;
        good[x] = v == Tri::True ? 1 : 2;
      }
      return good[x] == 1;
    });
    if (exhausted_) return Tri::Unknown;
    if (!hit) return Tri::False;
  }
  return Tri::True;
}

EvalResult Evaluator::sigma(LineId a, LineId b) {
  guard_proj3();
  check(a), check(b);
  begin();
  const Tri v = sigma_(a, b);
  if (v == Tri::True && !guided()) {
    LineSet xs = m_.neighbors(a) & m_.neighbors(b) & m_.closed_neighbors(0);
    std::array<LineId, 5> w{};
    xs.any_of([&](LineId x) { return sigma_good_(a, b, x, &w) == Tri::True; });
    wit_ = {{"g", 0}, {"x", w[0]}, {"a1", w[1]}, {"a2", w[2]}, {"b1", w[3]}, {"b2", w[4]}};
  }
  return finish(v);
}

EvalResult Evaluator::notsim3(LineId a, LineId b) {
  guard_proj3();
  check(a), check(b);
  begin();
  if (m_.eq(a, b)) return finish(Tri::True);
  return finish(sigma_(a, b));
}

}  // namespace lig::pred
