#include "lig/verify/scope.hpp"

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <map>
#include <mutex>
#include <random>
#include <set>
#include <thread>

#include "lig/geometry/oracles.hpp"

namespace lig::verify {

using geometry::Space;

Scope Scope::parse(const std::string& text) {
  Scope s;
  if (text == "exhaustive") {
    s.mode = ScopeMode::Exhaustive;
  } else if (text == "orbit" || text == "orbit-reps") {
    s.mode = ScopeMode::OrbitReps;
  } else if (text.rfind("sampled:", 0) == 0) {
    s.mode = ScopeMode::Sampled;
    const std::string num = text.substr(8);
    char* end = nullptr;
    const unsigned long long v = std::strtoull(num.c_str(), &end, 10);
    if (num.empty() || *end != '\0' || v == 0) throw Error(ErrorCode::Usage, "bad sample count in '" + text + "'");
    s.count = v;
  } else {
    throw Error(ErrorCode::Usage, "bad scope '" + text + "' (exhaustive, sampled:<N>, orbit)");
  }
  return s;
}

std::string Scope::label() const {
  std::string out;
  switch (mode) {
    case ScopeMode::Exhaustive: out = reduce_symmetry ? "exhaustive" : "exhaustive-ordered"; break;
    case ScopeMode::Sampled: out = "sampled:" + std::to_string(count); break;
    case ScopeMode::OrbitReps: out = "orbit"; break;
  }
  if (filter != Filter::None) out += std::string("/") + to_string(filter);
  return out;
}

Filter parse_filter(const std::string& text) {
  if (text == "none" || text.empty()) return Filter::None;
  if (text == "meeting") return Filter::Meeting;
  if (text == "disjoint") return Filter::Disjoint;
  if (text == "skew") return Filter::Skew;
  throw Error(ErrorCode::Usage, "bad filter '" + text + "' (none, meeting, disjoint, skew)");
}

const char* to_string(Filter f) {
  switch (f) {
    case Filter::None: return "none";
    case Filter::Meeting: return "meeting";
    case Filter::Disjoint: return "disjoint";
    case Filter::Skew: return "skew";
  }
  return "?";
}

namespace {

bool passes(const SpaceBundle& b, Filter f, Args a) {
  switch (f) {
    case Filter::None: return true;
    case Filter::Meeting: return b.model.sim(a[0], a[1]);
    case Filter::Disjoint: return a[0] != a[1] && !b.model.sim(a[0], a[1]);
    case Filter::Skew: return geometry::oracle_skew(b.space, a[0], a[1]);
  }
  return true;
}

std::uint64_t below(std::mt19937_64& rng, std::uint64_t n) { return rng() % n; }

// All T-triples in ascending order.
std::vector<pred::Triple> t_triples(const Space& s) {
  std::vector<pred::Triple> out;
  const auto L = static_cast<LineId>(s.line_count());
  for (LineId a = 0; a < L; ++a)
    for (LineId b = a + 1; b < L; ++b)
      for (LineId c = b + 1; c < L; ++c)
        if (geometry::oracle_t(s, a, b, c)) out.push_back({a, b, c});
  return out;
}

std::uint64_t power(std::uint64_t base, unsigned k) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < k; ++i) {
    if (r > kMaxExhaustive * 64 / std::max<std::uint64_t>(base, 1)) return UINT64_MAX;
    r *= base;
  }
  return r;
}

void enumerate(const PredicateSpec& spec, const SpaceBundle& b, const Scope& scope, unsigned k,
               const std::function<void(Args)>& visit) {
  const auto L = static_cast<LineId>(b.model.line_count());
  if (power(L, k) > kMaxExhaustive * (scope.reduce_symmetry && spec.symmetry == Symmetry::Full ? 6 : 1))
    throw Error(ErrorCode::Usage, "exhaustive sweep of " + spec.name + " on " + b.params().label() + " is too large");
  std::vector<LineId> t(k, 0);
  auto lower = [&](unsigned i) -> LineId {
    if (!scope.reduce_symmetry || i == 0) return 0;
    if (spec.symmetry == Symmetry::Full) return t[i - 1];
    if (spec.symmetry == Symmetry::FirstTwo && i == 1) return t[0];
    return 0;
  };
  std::function<void(unsigned)> rec = [&](unsigned i) {
    if (i == k) {
      if (passes(b, scope.filter, t)) visit(t);
      return;
    }
    for (LineId x = lower(i); x < L; ++x) {
      t[i] = x;
      rec(i + 1);
    }
  };
  rec(0);
}

void sample_lines(const SpaceBundle& b, unsigned k, std::uint64_t count, std::uint64_t seed, Filter filter,
                  const std::function<bool(Args)>& accept, TupleSet& out) {
  const auto L = b.model.line_count();
  std::mt19937_64 rng(seed);
  std::vector<LineId> t(k);
  std::uint64_t tries = 0;
  const std::uint64_t max_tries = std::max<std::uint64_t>(count, 1) * 10'000;
  while (out.size() < count) {
    if (++tries > max_tries) throw Error(ErrorCode::Usage, "filter admits too few tuples to sample");
    for (unsigned i = 0; i < k; ++i) t[i] = static_cast<LineId>(below(rng, L));
    if (k >= 2 && filter == Filter::Meeting) {
      const auto nb = b.model.neighbors(t[0]).to_vector();
      if (nb.empty()) continue;
      t[1] = nb[below(rng, nb.size())];
    }
    if (!passes(b, filter, t) || !accept(t)) continue;
    out.push(t);
  }
}

void sample_triple_pairs(const PredicateSpec& spec, const SpaceBundle& b, std::uint64_t count, std::uint64_t seed,
                         const std::function<bool(Args)>& accept, TupleSet& out) {
  const auto tt = t_triples(b.space);
  if (tt.empty()) throw Error(ErrorCode::Usage, "no T-triples in " + b.params().label());
  std::mt19937_64 rng(seed);
  auto shuffled = [&](pred::Triple t) {
    std::shuffle(t.begin(), t.end(), rng);
    return t;
  };
  std::array<LineId, 6> t{};
  std::uint64_t tries = 0;
  while (out.size() < count) {
    if (++tries > count * 100 + 1000) throw Error(ErrorCode::Usage, "could not sample enough triple pairs");
    const pred::Triple t1 = shuffled(tt[below(rng, tt.size())]);
    pred::Triple t2 = tt[below(rng, tt.size())];
    // half the draws look for a pair the oracle accepts
    if (rng() & 1) {
      for (int i = 0; i < 400; ++i) {
        const pred::Triple c = tt[below(rng, tt.size())];
        const std::array<LineId, 6> probe{t1[0], t1[1], t1[2], c[0], c[1], c[2]};
        if (spec.oracle(b.space, probe)) {
          t2 = c;
          break;
        }
      }
    }
    t2 = shuffled(t2);
    t = {t1[0], t1[1], t1[2], t2[0], t2[1], t2[2]};
    if (!accept(t)) continue;
    out.push(t);
  }
}

}  // namespace

std::string orbit_label(const Space& s, Args a) {
  if (a.empty()) return "sentence";
  std::string out = "eq:";
  // equality pattern as first-occurrence indices
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::size_t j = 0;
    while (a[j] != a[i]) ++j;
    out += std::to_string(j);
  }
  out += " meet:";
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      const auto tag = geometry::meet(s, a[i], a[j]).tag;
      out += tag == geometry::MeetResult::Tag::Equal ? 'e'
             : tag == geometry::MeetResult::Tag::Point ? 'p'
             : tag == geometry::MeetResult::Tag::Skew ? 's'
                                                        : 'l';
    }
  if (a.size() == 3) out += std::string(" class:") + geometry::to_string(geometry::oracle_classify3(s, a[0], a[1], a[2]));
  if (a.size() >= 3) {
    // coincidences among meet points
    std::vector<PointId> pts;
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = i + 1; j < a.size(); ++j) {
        const auto m = geometry::meet(s, a[i], a[j]);
        pts.push_back(m.is_point() ? m.point : kNoPoint);
      }
    out += " pts:";
    for (std::size_t i = 0; i < pts.size(); ++i) {
      std::size_t j = 0;
      while (pts[j] != pts[i]) ++j;
      out += pts[i] == kNoPoint ? std::string("-") : std::to_string(j);
    }
  }
  std::vector<LineId> all(a.begin(), a.end());
  out += " span:" + std::to_string(geometry::oracle_span_dim(s, all));
  return out;
}

TupleSet make_tuples(const PredicateSpec& spec, const SpaceBundle& b, const Scope& scope) {
  const unsigned k = spec.arity(b.params());
  TupleSet out;
  out.arity = k;
  if (scope.filter != Filter::None && k < 2) throw Error(ErrorCode::Usage, "filters need at least two arguments");
  if (k == 0) {
    out.push({});
    if (scope.mode == ScopeMode::OrbitReps) out.labels.push_back("sentence");
    return out;
  }
  if (spec.source == Source::TriplePairs) {
    if (scope.filter != Filter::None) throw Error(ErrorCode::Usage, "filters do not apply to triple pairs");
    if (scope.mode == ScopeMode::OrbitReps) throw Error(ErrorCode::Usage, "no orbit reduction for triple pairs");
    if (scope.mode == ScopeMode::Sampled) {
      sample_triple_pairs(spec, b, scope.count, scope.seed, [](Args) { return true; }, out);
      return out;
    }
    const auto tt = t_triples(b.space);
    if (!scope.reduce_symmetry || static_cast<std::uint64_t>(tt.size()) * tt.size() > kMaxExhaustive)
      throw Error(ErrorCode::Usage, "exhaustive sweep over triple pairs is too large");
    for (const auto& t1 : tt)
      for (const auto& t2 : tt) {
        const std::array<LineId, 6> t{t1[0], t1[1], t1[2], t2[0], t2[1], t2[2]};
        out.push(t);
      }
    return out;
  }
  switch (scope.mode) {
    case ScopeMode::Exhaustive:
      enumerate(spec, b, scope, k, [&](Args t) { out.push(t); });
      break;
    case ScopeMode::Sampled:
      sample_lines(b, k, scope.count, scope.seed, scope.filter, [](Args) { return true; }, out);
      break;
    case ScopeMode::OrbitReps: {
      std::set<std::string> seen;
      enumerate(spec, b, scope, k, [&](Args t) {
        std::string label = orbit_label(b.space, t);
        if (seen.insert(label).second) {
          out.push(t);
          out.labels.push_back(std::move(label));
        }
      });
      break;
    }
  }
  return out;
}

TupleSet sample_outside(const PredicateSpec& spec, const SpaceBundle& b, const TupleSet& avoid, std::uint64_t count,
                        std::uint64_t seed, Filter filter) {
  std::set<std::vector<LineId>> skip;
  for (std::size_t i = 0; i < avoid.size(); ++i) skip.emplace(avoid.at(i).begin(), avoid.at(i).end());
  auto accept = [&](Args t) { return !skip.count(std::vector<LineId>(t.begin(), t.end())); };
  TupleSet out;
  out.arity = spec.arity(b.params());
  if (out.arity == 0) return out;
  if (spec.source == Source::TriplePairs)
    sample_triple_pairs(spec, b, count, seed, accept, out);
  else
    sample_lines(b, out.arity, count, seed, filter, accept, out);
  return out;
}

unsigned default_workers() {
  if (const char* w = std::getenv("LIG_WORKERS")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(w, &end, 10);
    if (*w != '\0' && *end == '\0' && v > 0) return static_cast<unsigned>(std::min<unsigned long>(v, 256));
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

void parallel_chunks(std::size_t n, unsigned workers,
                     const std::function<void(unsigned, std::size_t, std::size_t)>& fn) {
  if (workers == 0) workers = default_workers();
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(n, 1)));
  if (workers <= 1) {
    fn(0, 0, n);
    return;
  }
  std::vector<std::thread> pool;
  std::exception_ptr err;
  std::mutex mu;
  for (unsigned w = 0; w < workers; ++w) {
    const std::size_t lo = n * w / workers, hi = n * (w + 1) / workers;
    pool.emplace_back([&, w, lo, hi] {
      try {
        fn(w, lo, hi);
      } catch (...) {
        std::lock_guard lock(mu);
        if (!err) err = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  if (err) std::rethrow_exception(err);
}

}  // namespace lig::verify
