#pragma once

#include <functional>

#include "lig/verify/registry.hpp"
#include "lig/verify/report.hpp"
#include "lig/verify/scope.hpp"

namespace lig::verify {

struct VerifyOptions {
  pred::EvalBudget budget;
  unsigned workers = 0;  // 0: default_workers()
  std::size_t max_witnesses = 16;
  /// Called now and then with (done, total); may be empty.
  std::function<void(std::size_t, std::size_t)> progress;
};

/// Compares the defined predicate with its oracle on every tuple of the
/// scope. Unknown is counted on its own, never as agreement. Throws
/// GuardMismatch if the predicate is not defined on the space.
VerificationReport verify(const PredicateSpec& spec, SpaceBundle& b, const Scope& scope, const VerifyOptions& opt);

/// Same, over an explicit tuple list.
VerificationReport verify_tuples(const PredicateSpec& spec, SpaceBundle& b, const TupleSet& tuples,
                                 const VerifyOptions& opt);

/// Re-runs one witness with a fresh evaluator and the oracle. True if the
/// recorded disagreement reproduces.
bool recheck(const PredicateSpec& spec, SpaceBundle& b, const Witness& w, const pred::EvalBudget& budget);

/// Single evaluation with a fresh evaluator.
pred::EvalResult evaluate(const PredicateSpec& spec, SpaceBundle& b, Args args, const pred::EvalBudget& budget);

}  // namespace lig::verify
