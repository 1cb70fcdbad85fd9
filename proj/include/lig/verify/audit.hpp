#pragma once

#include <string>
#include <vector>

#include "lig/verify/registry.hpp"
#include "lig/verify/report.hpp"
#include "lig/verify/scope.hpp"

namespace lig::verify {

/// Read transcript of one defined-side sweep: what the predicates touched.
struct PurityReport {
  std::string predicate;
  std::string space;
  std::string scope;
  std::uint64_t tuples = 0;
  std::uint64_t sim_reads = 0;
  std::uint64_t row_reads = 0;
  std::uint64_t eq_tests = 0;
  /// Coordinate reads on the space while the predicates ran.
  std::uint64_t coordinate_reads = 0;

  bool clean() const { return coordinate_reads == 0 && sim_reads + row_reads > 0; }
};

/// Evaluates the defined predicate (blind, no provider) over the tuples
/// with the model's read audit switched on and the space's coordinate
/// counter watched. Single-threaded so nothing else can touch the space.
PurityReport audit_sweep(const PredicateSpec& spec, SpaceBundle& b, const TupleSet& tuples,
                         std::uint64_t max_nodes = 200'000'000);

Json to_json(const PurityReport& r);
std::string to_text(const PurityReport& r);

}  // namespace lig::verify
