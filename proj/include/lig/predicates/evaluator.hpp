#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "lig/core/tri.hpp"
#include "lig/model/predicate_table.hpp"
#include "lig/predicates/provider.hpp"

namespace lig::pred {

enum class Mode { Blind, Guided, GuidedThenBlind };

const char* to_string(Mode m);
Mode parse_mode(const std::string& s);

struct EvalBudget {
  std::uint64_t max_nodes = 200'000'000;
  Mode mode = Mode::Blind;
  std::uint64_t seed = 0;
};

struct Binding {
  std::string var;
  LineId value;
  bool operator==(const Binding&) const = default;
};

struct EvalResult {
  Tri value = Tri::Unknown;
  std::uint64_t nodes_used = 0;
  /// Assignment for the outermost existential block (or, for formulas
  /// opening with a universal, the block under the first instance).
  std::vector<Binding> witnesses;
  /// Free-form remark, e.g. which chain length was needed.
  std::string note;

  bool is_true() const { return value == Tri::True; }
  bool is_false() const { return value == Tri::False; }
};

/// Evaluates the defined predicates literally over an intersection model.
/// Not thread-safe (keeps its own memo tables); use one per worker.
class Evaluator {
 public:
  explicit Evaluator(const PredicateTable& table, EvalBudget budget = {}, const WitnessProvider* provider = nullptr);

  const IntersectionModel& model() const { return m_; }
  const PredicateTable& table() const { return tab_; }
  const EvalBudget& budget() const { return budget_; }
  void set_budget(const EvalBudget& b) { budget_ = b; }
  void set_provider(const WitnessProvider* p) { provider_ = p; }

  // any space with n >= 3
  EvalResult s(LineId a1, LineId a2, LineId a3);
  EvalResult sbar(LineId a, LineId b, LineId c);
  EvalResult hash(LineId a1, LineId b1, LineId a2, LineId b2);
  EvalResult neq(LineId a, LineId b);

  // projective n >= 4
  EvalResult notsim_even(LineId a1, LineId b1);
  EvalResult notsim_odd(LineId a1, LineId b1);
  /// Dispatches on the parity of n.
  EvalResult notsim_proj(LineId a1, LineId b1);

  // 3-space stack, projective n = 3
  EvalResult t(LineId a1, LineId a2, LineId a3);
  EvalResult equiv_plus(const Triple& t1, const Triple& t2);
  EvalResult equiv_minus(const Triple& t1, const Triple& t2);
  /// x_3 ~= the six lines (sim or equal).
  EvalResult equiv_oplus(const Triple& t1, const Triple& t2);
  /// x_3 ~ the six lines, as printed.
  EvalResult equiv_oplus_strict(const Triple& t1, const Triple& t2);
  EvalResult sigma(LineId a, LineId b);
  EvalResult notsim3(LineId a, LineId b);

  // affine
  EvalResult alpha();
  EvalResult beta();
  /// beta with the printed disjunction.
  EvalResult beta_literal();
  EvalResult gamma(LineId a1, LineId a2);
  EvalResult pi(LineId a, LineId b);
  EvalResult m(const std::vector<LineId>& a, LineId x);
  EvalResult mq(const std::vector<LineId>& a, unsigned steps, LineId x);
  EvalResult delta0(LineId a1, LineId a2);
  EvalResult delta1(LineId a1, LineId a2);
  EvalResult notsim_affine(LineId a1, LineId a2);

  /// Longest M_r chain actually used by an accepted guided witness so far.
  unsigned max_chain_used() const { return max_chain_; }

  struct MemoSizes {
    std::size_t t = 0, plus = 0, minus = 0, oplus = 0;
  };
  MemoSizes memo_sizes() const { return {t_memo_.size(), plus_memo_.size(), minus_memo_.size(), oplus_memo_[0].size()}; }

 private:
  void begin();
  EvalResult finish(Tri v);
  bool tick(std::uint64_t n = 1);
  bool guided() const { return provider_ != nullptr && budget_.mode != Mode::Blind; }

  void guard_any() const;
  void guard_proj_even() const;
  void guard_proj_odd() const;
  void guard_proj3() const;
  void guard_affine() const;
  void check(LineId a) const { m_.check(a); }

  bool closed_sim(LineId a, LineId b) const { return m_.eq(a, b) || m_.sim(a, b); }
  LineSet closed_common(std::initializer_list<LineId> ls) const;

  Tri neq_(LineId a, LineId b);

  // projective n >= 4
  Tri notsim_proj_(LineId a1, LineId b1, bool odd);
  Tri proj_with_a_(const std::vector<LineId>& a, LineId b1, bool odd, bool record);
  Tri proj_guided_(const std::vector<LineId>& a, LineId b1, bool odd);

  // 3-space
  Tri t_(LineId a1, LineId a2, LineId a3);
  Tri plus_(const Triple& t1, const Triple& t2);
  Tri minus_(const Triple& t1, const Triple& t2);
  Tri oplus_(const Triple& t1, const Triple& t2, bool strict);
  Tri sigma_(LineId a, LineId b);
  Tri sigma_good_(LineId a, LineId b, LineId x, std::array<LineId, 5>* wit);
  Tri sigma_guided_(LineId a, LineId b, LineId g);
  bool plus_matrix_(const Triple& t1, const Triple& t2, LineId g, std::array<LineId, 6>* wit);

  // affine
  bool alpha_() const;
  Tri beta_(std::vector<LineId>* wit);
  Tri gamma_(LineId a1, LineId a2);
  Tri pi_(LineId a, LineId b);
  bool m_matrix_(const std::vector<LineId>& list, LineId x);
  Tri mq_(const std::vector<LineId>& a, unsigned steps, LineId x, std::vector<LineId>* chain);
  Tri mq_blind_(std::vector<LineId>& list, std::size_t base, unsigned steps_left, LineId x,
                std::vector<LineId>* chain);
  Tri mq_guided_(const std::vector<LineId>& a, unsigned steps, LineId x, std::vector<LineId>* chain);
  Tri delta_(LineId a1, LineId a2, bool odd);
  Tri delta_with_a_(const std::vector<LineId>& a, bool odd);

  const PredicateTable& tab_;
  const IntersectionModel& m_;
  EvalBudget budget_;
  const WitnessProvider* provider_;

  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;   // budget ran out
  bool incomplete_ = false;  // guided search gave up without proof
  bool settled() const { return !exhausted_ && !incomplete_; }
  std::vector<Binding> wit_;
  std::string note_;
  unsigned max_chain_ = 0;

  std::unordered_map<std::uint32_t, bool> t_memo_;
  std::unordered_map<std::uint64_t, bool> plus_memo_, minus_memo_;
  std::unordered_map<std::uint64_t, bool> oplus_memo_[2];
  std::unordered_map<std::uint64_t, bool> mq_memo_;
  std::map<std::vector<LineId>, unsigned> mq_seen_;
};

/// Sorted copy of a triple; T and the six-place predicates are symmetric
/// within each triple.
Triple sorted(Triple t);

}  // namespace lig::pred
