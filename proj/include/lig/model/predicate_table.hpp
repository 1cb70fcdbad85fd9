#pragma once

#include <atomic>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>
#include <vector>

#include "lig/core/tri.hpp"
#include "lig/model/intersection_model.hpp"

namespace lig {

/// Memoized low-level defined predicates: S (co-punctuality), the pencils
/// of S-bar, and #. All entries are computed from the intersection relation
/// alone and filled lazily; safe for concurrent readers.
class PredicateTable {
 public:
  explicit PredicateTable(const IntersectionModel& m);

  const IntersectionModel& model() const noexcept { return m_; }

  /// {z : S(x y z)}; empty when x and y do not intersect.
  const LineSet& s_set(LineId x, LineId y) const;
  bool s(LineId a, LineId b, LineId c) const;
  /// Direct quantifier-loop evaluation, bypassing the table.
  bool s_fresh(LineId a, LineId b, LineId c) const;

  /// {c : S-bar(a b c)}. Throws NotIntersecting if a and b do not meet.
  LineSet pencil(LineId a, LineId b) const;
  bool sbar(LineId a, LineId b, LineId c) const;

  /// a1 b1 # a2 b2, memoized under its argument symmetries.
  bool hash(LineId a1, LineId b1, LineId a2, LineId b2) const;
  bool hash_fresh(LineId a1, LineId b1, LineId a2, LineId b2) const;
  /// Cache probe only: Unknown when the tuple has not been evaluated yet.
  Tri hash_cached(LineId a1, LineId b1, LineId a2, LineId b2) const;

  /// Canonical key: each pair sorted, then the two pairs sorted.
  static std::uint64_t hash_key(LineId a1, LineId b1, LineId a2, LineId b2);

  struct Stats {
    std::uint64_t hash_hits = 0;
    std::uint64_t hash_misses = 0;
    std::uint64_t s_sets_built = 0;
  };
  Stats stats() const;

 private:
  std::size_t slot(LineId x, LineId y) const;  // x < y
  LineSet build_s_set(LineId x, LineId y) const;
  bool hash_eval(LineId a1, LineId b1, LineId a2, LineId b2) const;

  const IntersectionModel& m_;
  std::size_t n_;
  std::unique_ptr<std::once_flag[]> once_;
  mutable std::vector<LineSet> sets_;
  LineSet empty_;

  mutable std::shared_mutex hash_mu_;
  mutable std::unordered_map<std::uint64_t, bool> hash_cache_;
  mutable std::atomic<std::uint64_t> hits_{0}, misses_{0}, built_{0};
};

}  // namespace lig
