#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "lig/core/params.hpp"
#include "lig/core/tri.hpp"
#include "lig/predicates/evaluator.hpp"

namespace lig::verify {

using Json = nlohmann::ordered_json;

struct Counts {
  std::uint64_t total = 0;
  std::uint64_t agree = 0;
  std::uint64_t disagree = 0;
  std::uint64_t unknown = 0;
  std::uint64_t defined_true = 0;
  std::uint64_t oracle_true = 0;
  /// Unknowns split by what the oracle says.
  std::uint64_t unknown_oracle_true = 0;
  std::uint64_t nodes = 0;

  void add(Tri defined, bool oracle, std::uint64_t nodes_used);
  void merge(const Counts& o);
  bool operator==(const Counts&) const = default;
};

/// One tuple where the defined predicate and the oracle part ways (or the
/// defined side stayed Unknown). Enough to re-run it by hand.
struct Witness {
  std::vector<LineId> tuple;
  Tri defined = Tri::Unknown;
  bool oracle = false;
  std::uint64_t nodes = 0;
  std::string transcript;
  std::size_t index = 0;  // position in the sweep
};

struct OrbitRep {
  std::string label;
  std::vector<LineId> tuple;
  Tri defined = Tri::Unknown;
  bool oracle = false;
};

struct VerificationReport {
  SpaceParams space;
  std::string predicate;
  std::string oracle;
  bool literal = false;
  std::string scope;
  std::uint64_t seed = 0;
  pred::Mode mode = pred::Mode::Blind;
  std::uint64_t budget = 0;
  unsigned workers = 1;

  Counts counts;
  std::vector<Witness> witnesses;
  std::vector<Witness> unknowns;
  std::vector<OrbitRep> orbits;
  std::optional<Counts> cross_check;
  std::vector<Witness> cross_check_witnesses;

  unsigned max_chain = 0;
  double elapsed_ms = 0;

  std::uint64_t disagreements() const;
  std::uint64_t unknown_total() const;
};

/// 0 clean, 1 disagreement, 2 unknowns (unless allowed).
int exit_code(const VerificationReport& r, bool allow_unknown);

/// Stable key order: space, predicate, scope, counts, witnesses, seed,
/// elapsed_ms, then the extras. Without timing the output is a pure
/// function of the inputs.
Json to_json(const VerificationReport& r, bool timing = true);
VerificationReport report_from_json(const Json& j);
std::string to_text(const VerificationReport& r);

Json to_json(const Counts& c);
Counts counts_from_json(const Json& j);

}  // namespace lig::verify
