#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "lig/verify/registry.hpp"

namespace lig::verify {

enum class ScopeMode { Exhaustive, Sampled, OrbitReps };

/// Restriction on the first two arguments.
enum class Filter { None, Meeting, Disjoint, Skew };

struct Scope {
  ScopeMode mode = ScopeMode::Exhaustive;
  std::uint64_t count = 0;  // Sampled
  std::uint64_t seed = 1;
  Filter filter = Filter::None;
  /// Exhaustive sweeps visit one tuple per argument-symmetry class.
  bool reduce_symmetry = true;
  /// OrbitReps: size of the sampled cross-check outside the representatives.
  std::uint64_t cross_check = 1000;

  /// "exhaustive", "sampled:<N>", "orbit"
  static Scope parse(const std::string& text);
  std::string label() const;
};

Filter parse_filter(const std::string& text);
const char* to_string(Filter f);

/// Flat tuple storage: size() tuples of `arity` ids each.
struct TupleSet {
  unsigned arity = 0;
  std::vector<LineId> flat;
  /// OrbitReps only: one label per tuple.
  std::vector<std::string> labels;
  std::size_t count = 0;

  std::size_t size() const { return count; }
  Args at(std::size_t i) const { return Args(flat.data() + i * arity, arity); }
  void push(Args a) {
    flat.insert(flat.end(), a.begin(), a.end());
    ++count;
  }
};

/// Upper bound on materialized exhaustive sweeps.
inline constexpr std::uint64_t kMaxExhaustive = 50'000'000;

/// Builds the tuples a scope stands for. Sampled sets are reproducible
/// from the seed. Throws Error(Usage) for combinations that make no sense.
TupleSet make_tuples(const PredicateSpec& spec, const SpaceBundle& b, const Scope& scope);

/// Seeded uniform sample that avoids the given tuples (orbit cross-check).
TupleSet sample_outside(const PredicateSpec& spec, const SpaceBundle& b, const TupleSet& avoid, std::uint64_t count,
                        std::uint64_t seed, Filter filter);

/// Orbit label of a tuple of lines under the collineation group, as far as
/// pairwise incidence data can tell.
std::string orbit_label(const geometry::Space& s, Args a);

/// Runs fn(worker, begin, end) over contiguous chunks of [0, n).
/// Worker count from LIG_WORKERS, else the hardware concurrency.
void parallel_chunks(std::size_t n, unsigned workers,
                     const std::function<void(unsigned, std::size_t, std::size_t)>& fn);
unsigned default_workers();

}  // namespace lig::verify
