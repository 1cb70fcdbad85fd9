#pragma once

#include <atomic>
#include <cstdint>
#include <span>
#include <vector>

#include "lig/core/params.hpp"
#include "lig/model/line_set.hpp"

namespace lig {

/// Read counters. Only ~ and = ever get counted; there is nothing else in
/// the model to read.
struct ReadAudit {
  std::atomic<bool> enabled{false};
  std::atomic<std::uint64_t> sim_reads{0};
  std::atomic<std::uint64_t> row_reads{0};
  std::atomic<std::uint64_t> eq_tests{0};

  void reset() {
    sim_reads = 0;
    row_reads = 0;
    eq_tests = 0;
  }
};

/// The line universe with the intersection relation as adjacency bitsets.
/// Holds no coordinates.
class IntersectionModel {
 public:
  /// `rows` holds line_count rows of words_for(line_count) words each.
  /// Throws AsymmetricAdjacency if the relation is not symmetric or has a
  /// set diagonal bit.
  IntersectionModel(SpaceParams params, std::size_t line_count, std::vector<Word> rows);
  IntersectionModel(IntersectionModel&& o) noexcept
      : params_(o.params_), n_(o.n_), w_(o.w_), adj_(std::move(o.adj_)) {}
  IntersectionModel(const IntersectionModel& o) : params_(o.params_), n_(o.n_), w_(o.w_), adj_(o.adj_) {}
  IntersectionModel& operator=(const IntersectionModel&) = delete;

  const SpaceParams& params() const noexcept { return params_; }
  std::size_t line_count() const noexcept { return n_; }
  std::size_t words() const noexcept { return w_; }

  bool sim(LineId a, LineId b) const {
    check(a);
    check(b);
    if (audit_.enabled.load(std::memory_order_relaxed)) audit_.sim_reads.fetch_add(1, std::memory_order_relaxed);
    return (adj_[a * w_ + (b >> 6)] >> (b & 63)) & 1u;
  }

  /// Line equality, routed through here so the audit sees it.
  bool eq(LineId a, LineId b) const {
    if (audit_.enabled.load(std::memory_order_relaxed)) audit_.eq_tests.fetch_add(1, std::memory_order_relaxed);
    return a == b;
  }

  /// Raw adjacency row of a (bit b set iff a ~ b).
  const Word* row(LineId a) const {
    check(a);
    if (audit_.enabled.load(std::memory_order_relaxed)) audit_.row_reads.fetch_add(1, std::memory_order_relaxed);
    return adj_.data() + a * w_;
  }

  LineSet neighbors(LineId a) const { return LineSet(n_, row(a)); }
  /// N(a) together with a itself: the lines x with x ~= a.
  LineSet closed_neighbors(LineId a) const {
    LineSet s = neighbors(a);
    s.set(a);
    return s;
  }
  /// Intersection of the neighbourhoods; the full universe for an empty list.
  LineSet common_neighbors(std::span<const LineId> lines) const;
  LineSet universe() const { return LineSet::full(n_); }
  LineSet empty_set() const { return LineSet(n_); }
  std::size_t degree(LineId a) const;

  ReadAudit& audit() const { return audit_; }

  bool same_relation(const IntersectionModel& o) const { return n_ == o.n_ && adj_ == o.adj_; }

  void check(LineId a) const {
    if (a >= n_) throw Error(ErrorCode::InvalidId, "line id " + std::to_string(a) + " out of range");
  }

 private:
  SpaceParams params_;
  std::size_t n_;
  std::size_t w_;
  std::vector<Word> adj_;
  mutable ReadAudit audit_;
};

/// RAII switch for the read audit.
class AuditScope {
 public:
  explicit AuditScope(const IntersectionModel& m) : m_(m) {
    m_.audit().reset();
    m_.audit().enabled = true;
  }
  ~AuditScope() { m_.audit().enabled = false; }
  AuditScope(const AuditScope&) = delete;
  AuditScope& operator=(const AuditScope&) = delete;

 private:
  const IntersectionModel& m_;
};

}  // namespace lig
