#include "lig/verify/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>

namespace lig::verify {

namespace {

std::string transcript(const pred::EvalResult& r) {
  std::string s;
  for (const auto& b : r.witnesses) s += (s.empty() ? "" : " ") + b.var + "=" + std::to_string(b.value);
  if (!r.note.empty()) s += (s.empty() ? "" : "; ") + r.note;
  return s;
}

const pred::WitnessProvider* provider_for(SpaceBundle& b, const pred::EvalBudget& budget) {
  return budget.mode == pred::Mode::Blind ? nullptr : &b.provider;
}

struct Partial {
  Counts counts;
  std::vector<Witness> bad, unknown;
  unsigned max_chain = 0;
};

Partial sweep(const PredicateSpec& spec, SpaceBundle& b, const TupleSet& tuples, const VerifyOptions& opt,
              std::vector<OrbitRep>* reps) {
  const unsigned workers = opt.workers ? opt.workers : default_workers();
  std::vector<Partial> parts(std::max(1u, workers));
  std::atomic<std::size_t> done{0};
  std::mutex progress_mu;
  if (reps) reps->resize(tuples.size());
  parallel_chunks(tuples.size(), workers, [&](unsigned w, std::size_t lo, std::size_t hi) {
    pred::Evaluator ev(b.table, opt.budget, provider_for(b, opt.budget));
    Partial& p = parts[w];
    for (std::size_t i = lo; i < hi; ++i) {
      const Args t = tuples.at(i);
      const pred::EvalResult r = spec.defined(ev, t);
      const bool want = spec.oracle(b.space, t);
      p.counts.add(r.value, want, r.nodes_used);
      const bool unknown = r.value == Tri::Unknown;
      const bool mismatch = !unknown && r.is_true() != want;
      if ((mismatch && p.bad.size() < opt.max_witnesses) || (unknown && p.unknown.size() < opt.max_witnesses)) {
        Witness wi{std::vector<LineId>(t.begin(), t.end()), r.value, want, r.nodes_used, transcript(r), i};
        (mismatch ? p.bad : p.unknown).push_back(std::move(wi));
      }
      if (reps) (*reps)[i] = {tuples.labels[i], std::vector<LineId>(t.begin(), t.end()), r.value, want};
      const std::size_t d = ++done;
      if (opt.progress && d % 4096 == 0) {
        std::lock_guard lock(progress_mu);
        opt.progress(d, tuples.size());
      }
    }
    p.max_chain = ev.max_chain_used();
  });
  // merge in chunk order, so the report does not depend on scheduling
  Partial out;
  for (auto& p : parts) {
    out.counts.merge(p.counts);
    out.bad.insert(out.bad.end(), p.bad.begin(), p.bad.end());
    out.unknown.insert(out.unknown.end(), p.unknown.begin(), p.unknown.end());
    out.max_chain = std::max(out.max_chain, p.max_chain);
  }
  auto by_index = [](const Witness& x, const Witness& y) { return x.index < y.index; };
  std::sort(out.bad.begin(), out.bad.end(), by_index);
  std::sort(out.unknown.begin(), out.unknown.end(), by_index);
  if (out.bad.size() > opt.max_witnesses) out.bad.resize(opt.max_witnesses);
  if (out.unknown.size() > opt.max_witnesses) out.unknown.resize(opt.max_witnesses);
  if (opt.progress) opt.progress(tuples.size(), tuples.size());
  return out;
}

VerificationReport start(const PredicateSpec& spec, const SpaceBundle& b, const VerifyOptions& opt) {
  VerificationReport r;
  r.space = b.params();
  r.predicate = spec.name;
  r.oracle = spec.oracle_name;
  r.literal = spec.literal;
  r.mode = opt.budget.mode;
  r.budget = opt.budget.max_nodes;
  r.workers = opt.workers ? opt.workers : default_workers();
  return r;
}

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

VerificationReport verify(const PredicateSpec& spec, SpaceBundle& b, const Scope& scope, const VerifyOptions& opt) {
  require_guard(spec, b.params());
  const auto t0 = std::chrono::steady_clock::now();
  VerificationReport r = start(spec, b, opt);
  r.scope = scope.label();
  r.seed = scope.seed;
  const TupleSet tuples = make_tuples(spec, b, scope);
  Partial p = sweep(spec, b, tuples, opt, scope.mode == ScopeMode::OrbitReps ? &r.orbits : nullptr);
  r.counts = p.counts;
  r.witnesses = std::move(p.bad);
  r.unknowns = std::move(p.unknown);
  r.max_chain = p.max_chain;
  if (scope.mode == ScopeMode::OrbitReps && tuples.arity > 0) {
    // the orbit claim is not trusted: check a sample outside the representatives
    const TupleSet extra = sample_outside(spec, b, tuples, scope.cross_check, scope.seed, scope.filter);
    VerifyOptions o2 = opt;
    o2.progress = nullptr;
    Partial q = sweep(spec, b, extra, o2, nullptr);
    r.cross_check = q.counts;
    r.cross_check_witnesses = std::move(q.bad);
    r.max_chain = std::max(r.max_chain, q.max_chain);
  }
  r.elapsed_ms = ms_since(t0);
  return r;
}

VerificationReport verify_tuples(const PredicateSpec& spec, SpaceBundle& b, const TupleSet& tuples,
                                 const VerifyOptions& opt) {
  require_guard(spec, b.params());
  const auto t0 = std::chrono::steady_clock::now();
  VerificationReport r = start(spec, b, opt);
  r.scope = "list:" + std::to_string(tuples.size());
  Partial p = sweep(spec, b, tuples, opt, nullptr);
  r.counts = p.counts;
  r.witnesses = std::move(p.bad);
  r.unknowns = std::move(p.unknown);
  r.max_chain = p.max_chain;
  r.elapsed_ms = ms_since(t0);
  return r;
}

pred::EvalResult evaluate(const PredicateSpec& spec, SpaceBundle& b, Args args, const pred::EvalBudget& budget) {
  require_guard(spec, b.params());
  if (args.size() != spec.arity(b.params()))
    throw Error(ErrorCode::Usage, spec.name + " takes " + std::to_string(spec.arity(b.params())) + " arguments on " +
                                      b.params().label());
  pred::Evaluator ev(b.table, budget, provider_for(b, budget));
  return spec.defined(ev, args);
}

bool recheck(const PredicateSpec& spec, SpaceBundle& b, const Witness& w, const pred::EvalBudget& budget) {
  const pred::EvalResult r = evaluate(spec, b, w.tuple, budget);
  const bool want = spec.oracle(b.space, w.tuple);
  return want == w.oracle && r.value == w.defined && r.value != Tri::Unknown && r.is_true() != want;
}

}  // namespace lig::verify
