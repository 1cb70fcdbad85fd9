#include "lig/model/predicate_table.hpp"

#include <algorithm>

namespace lig {

PredicateTable::PredicateTable(const IntersectionModel& m)
    : m_(m), n_(m.line_count()), empty_(m.line_count()) {
  const std::size_t slots = n_ * (n_ - 1) / 2;
  once_ = std::make_unique<std::once_flag[]>(slots);
  sets_.resize(slots);
}

std::size_t PredicateTable::slot(LineId x, LineId y) const {
  return static_cast<std::size_t>(x) * n_ - static_cast<std::size_t>(x) * (x + 1) / 2 + (y - x - 1);
}

LineSet PredicateTable::build_s_set(LineId x, LineId y) const {
  // S(x y z) needs x ~ y ~ z ~ x, and every g must meet some common
  // neighbour of x, y, z. The second part is a covering test: the union of
  // N(h) over those common neighbours has to be everything.
  LineSet out(n_);
  const LineSet cand = m_.neighbors(x).and_words(m_.row(y));
  const LineSet all = m_.universe();
  LineSet cover(n_);
  cand.for_each([&](LineId z) {
    LineSet c = cand;
    c.and_words(m_.row(z));
    cover.clear();
    const bool full = c.any_of([&](LineId h) {
      cover.or_words(m_.row(h));
      return cover == all;
    });
    if (full) out.set(z);
  });
  built_.fetch_add(1, std::memory_order_relaxed);
  return out;
}

const LineSet& PredicateTable::s_set(LineId x, LineId y) const {
  m_.check(x);
  m_.check(y);
  if (x == y || !m_.sim(x, y)) return empty_;
  if (x > y) std::swap(x, y);
  const std::size_t i = slot(x, y);
  std::call_once(once_[i], [&] { sets_[i] = build_s_set(x, y); });
  return sets_[i];
}

bool PredicateTable::s(LineId a, LineId b, LineId c) const {
  m_.check(c);
  return s_set(a, b).test(c);
}

bool PredicateTable::s_fresh(LineId a, LineId b, LineId c) const {
  // (forall g)(exists h) g~h & a~b & b~c & c~a & a~h & b~h & c~h
  if (!(m_.sim(a, b) && m_.sim(b, c) && m_.sim(c, a))) return false;
  const LineId abc[3] = {a, b, c};
  const LineSet common = m_.common_neighbors(abc);
  for (LineId g = 0; g < n_; ++g)
    if (!kernels::ops().and_any(common.data(), m_.row(g), common.word_count())) return false;
  return true;
}

LineSet PredicateTable::pencil(LineId a, LineId b) const {
  if (!m_.sim(a, b))
    throw Error(ErrorCode::NotIntersecting, "lines " + std::to_string(a) + " and " + std::to_string(b) + " do not meet");
  LineSet p = s_set(a, b);
  p.set(a);
  p.set(b);
  return p;
}

bool PredicateTable::sbar(LineId a, LineId b, LineId c) const {
  // S(abc) | (a~b & (c=a | c=b))
  return s(a, b, c) || (m_.sim(a, b) && (m_.eq(c, a) || m_.eq(c, b)));
}

std::uint64_t PredicateTable::hash_key(LineId a1, LineId b1, LineId a2, LineId b2) {
  if (a1 > b1) std::swap(a1, b1);
  if (a2 > b2) std::swap(a2, b2);
  if (std::pair(a1, b1) > std::pair(a2, b2)) {
    std::swap(a1, a2);
    std::swap(b1, b2);
  }
  return (std::uint64_t{a1} << 48) | (std::uint64_t{b1} << 32) | (std::uint64_t{a2} << 16) | b2;
}

bool PredicateTable::hash_eval(LineId a1, LineId b1, LineId a2, LineId b2) const {
  // (forall g)(exists h1 h2) a1~b1 & a2~b2 &
  //   ((Sbar(a1 b1 h1) & Sbar(a2 b2 h2) & S(h1 h2 g)) | Sbar(a1 b1 g) | Sbar(a2 b2 g))
  if (!m_.sim(a1, b1) || !m_.sim(a2, b2)) return false;
  const LineSet p1 = pencil(a1, b1);
  const LineSet p2 = pencil(a2, b2);
  const LineSet either = p1 | p2;
  const auto& k = kernels::ops();
  for (LineId g = 0; g < n_; ++g) {
    if (either.test(g)) continue;
    LineSet c = p1;
    c.and_words(m_.row(g));
    const bool ok = c.any_of([&](LineId h1) {
      const LineSet& tail = s_set(h1, g);
      return k.and_any(tail.data(), p2.data(), tail.word_count());
    });
    if (!ok) return false;
  }
  return true;
}

bool PredicateTable::hash(LineId a1, LineId b1, LineId a2, LineId b2) const {
  m_.check(a1);
  m_.check(b1);
  m_.check(a2);
  m_.check(b2);
  const std::uint64_t key = hash_key(a1, b1, a2, b2);
  {
    std::shared_lock lock(hash_mu_);
    auto it = hash_cache_.find(key);
    if (it != hash_cache_.end()) {
      hits_.fetch_add(1, std::memory_order_relaxed);
      return it->second;
    }
  }
  misses_.fetch_add(1, std::memory_order_relaxed);
  const bool v = hash_eval(a1, b1, a2, b2);
  std::unique_lock lock(hash_mu_);
  hash_cache_.emplace(key, v);
  return v;
}

bool PredicateTable::hash_fresh(LineId a1, LineId b1, LineId a2, LineId b2) const {
  // Straight quantifier loops with S-bar and S evaluated by s_fresh.
  if (!m_.sim(a1, b1) || !m_.sim(a2, b2)) return false;
  auto sbar_f = [&](LineId a, LineId b, LineId c) {
    return s_fresh(a, b, c) || (m_.sim(a, b) && (c == a || c == b));
  };
  for (LineId g = 0; g < n_; ++g) {
    if (sbar_f(a1, b1, g) || sbar_f(a2, b2, g)) continue;
    bool found = false;
    for (LineId h1 = 0; h1 < n_ && !found; ++h1) {
      if (!m_.sim(h1, g) || !sbar_f(a1, b1, h1)) continue;
      for (LineId h2 = 0; h2 < n_ && !found; ++h2)
        if (m_.sim(h2, g) && m_.sim(h1, h2) && sbar_f(a2, b2, h2) && s_fresh(h1, h2, g)) found = true;
    }
    if (!found) return false;
  }
  return true;
}

Tri PredicateTable::hash_cached(LineId a1, LineId b1, LineId a2, LineId b2) const {
  std::shared_lock lock(hash_mu_);
  auto it = hash_cache_.find(hash_key(a1, b1, a2, b2));
  return it == hash_cache_.end() ? Tri::Unknown : tri(it->second);
}

PredicateTable::Stats PredicateTable::stats() const {
  return {hits_.load(), misses_.load(), built_.load()};
}

}  // namespace lig
