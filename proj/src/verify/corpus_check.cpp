#include "lig/verify/corpus_check.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <memory>
#include <random>
#include <sstream>

#include "lig/dsl/dsl_eval.hpp"
#include "lig/dsl/lint.hpp"
#include "lig/dsl/parser.hpp"
#include "lig/verify/scope.hpp"

namespace lig::verify {

std::string hand_coded_name(const std::string& corpus_name) {
  static const std::map<std::string, std::string> names = {
      {"S", "s"},          {"Sbar", "sbar"},           {"Hash", "hash"},
      {"Neq", "neq"},      {"NotSimEven", "notsim_even"}, {"NotSimOdd", "notsim_odd"},
      {"T", "t"},          {"EquivPlus", "equiv_plus"}, {"EquivMinus", "equiv_minus"},
      {"EquivOplus", "equiv_oplus"}, {"Sigma", "sigma"}, {"NotSim3", "notsim3"},
      {"Alpha", "alpha"},  {"Beta", "beta"},           {"Gamma", "gamma"},
      {"Pi", "pi"},        {"M", "m"},                 {"Mq", "mq"},
      {"Delta0", "delta0"}, {"Delta1", "delta1"},      {"NotSimAffine", "notsim_affine"},
  };
  auto it = names.find(corpus_name);
  return it == names.end() ? std::string() : it->second;
}

std::string injected_negation_violation() {
  const dsl::Definition bad = dsl::parse_definition("Bad(a, b) := !sim(a, b)");
  const auto v = dsl::check_positive(bad, dsl::PositivityFlags{true, true});
  return v.empty() ? std::string() : dsl::to_string(v.front());
}

bool CorpusCheckReport::ok() const {
  if (!injected_rejected) return false;
  return std::all_of(entries.begin(), entries.end(), [](const CorpusEntryResult& e) { return e.ok(); });
}

namespace {

// Both argument pairs meet, as # needs to be interesting.
TupleSet hash_samples(const SpaceBundle& b, std::uint64_t count, std::uint64_t seed) {
  TupleSet out;
  out.arity = 4;
  std::mt19937_64 rng(seed);
  const auto L = b.model.line_count();
  while (out.size() < count) {
    std::array<LineId, 4> t{};
    for (int i = 0; i < 4; i += 2) {
      t[i] = static_cast<LineId>(rng() % L);
      const auto nb = b.model.neighbors(t[i]).to_vector();
      t[i + 1] = nb[rng() % nb.size()];
    }
    out.push(t);
  }
  return out;
}

}  // namespace

CorpusCheckReport corpus_check(const dsl::Corpus& corpus, SpaceBundle& b, const CorpusCheckOptions& opt) {
  const auto t_start = std::chrono::steady_clock::now();
  CorpusCheckReport rep;
  rep.space = b.params();
  const dsl::Instance inst = corpus.instantiate(b.params());
  const auto lint = inst.lint();
  const std::string injected = injected_negation_violation();
  rep.injected_rejected = !injected.empty();
  rep.injected_violation = injected;

  // one DSL evaluator per worker for the whole run, so later entries reuse
  // the memo of the definitions they call
  const unsigned workers = opt.workers ? opt.workers : default_workers();
  std::vector<std::unique_ptr<dsl::DslEvaluator>> dsl_ev(workers);
  for (auto& d : dsl_ev) d = std::make_unique<dsl::DslEvaluator>(inst, b.model);

  for (const auto& entry : inst.entries()) {
    const std::string& name = entry.def.name;
    if (!opt.only.empty() && std::find(opt.only.begin(), opt.only.end(), name) == opt.only.end()) continue;
    const auto t0 = std::chrono::steady_clock::now();
    CorpusEntryResult res;
    res.name = name;
    res.audit_only = entry.unit->audit_only;
    res.arity = static_cast<unsigned>(entry.def.params.size());
    for (const auto& [n, vs] : lint)
      if (n == name)
        for (const auto& v : vs) res.lint.push_back(dsl::to_string(v));
    res.evaluator = hand_coded_name(name);
    if (res.evaluator.empty()) {
      res.lint.push_back("no hand-coded evaluator for " + name);
      rep.entries.push_back(std::move(res));
      continue;
    }
    const PredicateSpec& spec = find_predicate(res.evaluator);
    if (spec.arity(b.params()) != res.arity)
      throw Error(ErrorCode::WrongDimension, name + ": corpus arity " + std::to_string(res.arity) +
                                                 " differs from the hand-coded one");

    TupleSet tuples;
    if (res.arity <= 3) {
      Scope sc;
      sc.mode = ScopeMode::Exhaustive;
      sc.reduce_symmetry = false;
      tuples = make_tuples(spec, b, sc);
      res.scope = "exhaustive";
    } else if (spec.source == Source::Lines && res.arity == 4) {
      tuples = hash_samples(b, opt.samples, opt.seed);
      res.scope = "sampled:" + std::to_string(opt.samples) + "/meeting-pairs";
    } else {
      Scope sc;
      sc.mode = ScopeMode::Sampled;
      sc.count = opt.samples;
      sc.seed = opt.seed;
      tuples = make_tuples(spec, b, sc);
      res.scope = "sampled:" + std::to_string(opt.samples);
    }

    std::vector<Counts> counts(workers);
    std::vector<std::vector<Witness>> bad(workers);
    parallel_chunks(tuples.size(), workers, [&](unsigned w, std::size_t lo, std::size_t hi) {
      pred::Evaluator hand(b.table);
      for (std::size_t i = lo; i < hi; ++i) {
        const Args t = tuples.at(i);
        const std::vector<LineId> args(t.begin(), t.end());
        const pred::EvalResult d = dsl_ev[w]->eval(name, args);
        const pred::EvalResult h = spec.defined(hand, t);
        if (h.value == Tri::Unknown) {
          // hand-coded side out of budget: count as unknown
          counts[w].add(Tri::Unknown, false, d.nodes_used);
          continue;
        }
        counts[w].add(d.value, h.is_true(), d.nodes_used);
        if (d.value != Tri::Unknown && d.value != h.value && bad[w].size() < opt.max_witnesses)
          bad[w].push_back({args, d.value, h.is_true(), d.nodes_used, "", i});
      }
    });
    for (unsigned w = 0; w < workers; ++w) {
      res.counts.merge(counts[w]);
      res.mismatches.insert(res.mismatches.end(), bad[w].begin(), bad[w].end());
    }
    if (res.mismatches.size() > opt.max_witnesses) res.mismatches.resize(opt.max_witnesses);
    res.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    rep.entries.push_back(std::move(res));
  }
  rep.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t_start).count();
  return rep;
}

Json to_json(const CorpusCheckReport& r, bool timing) {
  Json j;
  j["space"] = r.space.label();
  Json es = Json::array();
  for (const auto& e : r.entries) {
    Json x;
    x["name"] = e.name;
    x["evaluator"] = e.evaluator;
    x["arity"] = e.arity;
    x["scope"] = e.scope;
    x["audit_only"] = e.audit_only;
    x["counts"] = to_json(e.counts);
    Json ws = Json::array();
    for (const auto& w : e.mismatches) {
      Json wj;
      wj["tuple"] = w.tuple;
      wj["dsl"] = to_string(w.defined);
      wj["hand_coded"] = w.oracle;
      ws.push_back(wj);
    }
    x["mismatches"] = ws;
    x["lint"] = e.lint;
    if (timing) x["elapsed_ms"] = e.elapsed_ms;
    es.push_back(x);
  }
  j["entries"] = es;
  j["injected_rejected"] = r.injected_rejected;
  j["injected_violation"] = r.injected_violation;
  j["ok"] = r.ok();
  if (timing) j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

std::string to_text(const CorpusCheckReport& r) {
  std::ostringstream o;
  o << "corpus on " << r.space.label() << "\n";
  for (const auto& e : r.entries) {
    o << "  " << (e.ok() ? "ok  " : "FAIL") << " " << e.name << "/" << e.arity << " vs " << e.evaluator << " ["
      << e.scope << (e.audit_only ? ", audit-only" : "") << "] tuples " << e.counts.total << " agree "
      << e.counts.agree << " disagree " << e.counts.disagree << " unknown " << e.counts.unknown << "  "
      << static_cast<long long>(e.elapsed_ms) << " ms\n";
    for (const auto& l : e.lint) o << "       lint: " << l << "\n";
    for (const auto& w : e.mismatches) {
      o << "       mismatch (";
      for (std::size_t i = 0; i < w.tuple.size(); ++i) o << (i ? " " : "") << w.tuple[i];
      o << "): dsl " << to_string(w.defined) << ", hand-coded " << (w.oracle ? "true" : "false") << "\n";
    }
  }
  o << "  injected !sim formula " << (r.injected_rejected ? "rejected: " + r.injected_violation : "ACCEPTED")
    << "\n";
  return o.str();
}

}  // namespace lig::verify
