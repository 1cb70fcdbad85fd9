#pragma once

#include <string>
#include <vector>

#include "lig/dsl/corpus.hpp"
#include "lig/verify/registry.hpp"
#include "lig/verify/report.hpp"

namespace lig::verify {

struct CorpusCheckOptions {
  /// Tuples per entry above arity 3; arity <= 3 is swept exhaustively.
  std::uint64_t samples = 10'000;
  std::uint64_t seed = 1;
  unsigned workers = 0;
  std::size_t max_witnesses = 8;
  /// Only these corpus names, if non-empty.
  std::vector<std::string> only;
};

struct CorpusEntryResult {
  std::string name;       // corpus label
  std::string evaluator;  // registry name of the hand-coded side
  unsigned arity = 0;
  std::string scope;
  bool audit_only = false;
  Counts counts;  // oracle column holds the hand-coded value
  std::vector<Witness> mismatches;
  std::vector<std::string> lint;  // violations under the declared flags
  double elapsed_ms = 0;

  bool ok() const { return counts.disagree == 0 && counts.unknown == 0 && lint.empty(); }
};

struct CorpusCheckReport {
  SpaceParams space;
  std::vector<CorpusEntryResult> entries;
  /// The linter must reject a negated-~ formula.
  bool injected_rejected = false;
  std::string injected_violation;
  double elapsed_ms = 0;

  bool ok() const;
};

/// Registry name of the hand-coded evaluator for a corpus label, or "".
std::string hand_coded_name(const std::string& corpus_name);

/// Every corpus formula whose guard admits the space, against the
/// hand-coded evaluator.
CorpusCheckReport corpus_check(const dsl::Corpus& corpus, SpaceBundle& b, const CorpusCheckOptions& opt);

/// Lints `Bad(a, b) := !sim(a, b)`; returns the first violation text, or
/// "" if the linter accepted it.
std::string injected_negation_violation();

Json to_json(const CorpusCheckReport& r, bool timing = true);
std::string to_text(const CorpusCheckReport& r);

}  // namespace lig::verify
