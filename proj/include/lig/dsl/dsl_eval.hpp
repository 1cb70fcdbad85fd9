#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "lig/core/tri.hpp"
#include "lig/dsl/corpus.hpp"
#include "lig/model/intersection_model.hpp"
#include "lig/predicates/evaluator.hpp"

namespace lig::dsl {

struct DslOptions {
  std::uint64_t max_nodes = 4'000'000'000;
  /// Decide (forall x_1..x_t) OR_{i<j} x_i = x_j by comparing t with the
  /// number of lines instead of enumerating.
  bool pigeonhole = true;
};

/// Reference evaluator: Tarski semantics over the model with exhaustive
/// quantifier loops. Existential blocks bind variables left to right and
/// test each conjunct as soon as its variables are bound; that only
/// reorders the search. No witness guidance. Not thread-safe.
class DslEvaluator {
 public:
  DslEvaluator(const Instance& inst, const IntersectionModel& model, DslOptions opt = {});
  ~DslEvaluator();

  /// Evaluates a corpus definition. Throws UnresolvedPredRef for an
  /// unknown name, WrongDimension for a wrong argument count.
  pred::EvalResult eval(const std::string& name, const std::vector<LineId>& args);
  /// Evaluates a formula under an assignment of its free variables.
  pred::EvalResult eval(const NodePtr& f, const std::map<std::string, LineId>& assignment);

  std::size_t memo_size() const { return memo_.size(); }

  struct CNode;
  struct Compiled;

 private:
  Tri ev(const CNode& n, std::vector<LineId>& env);
  Tri call(const Compiled& c, std::vector<LineId> args);
  Tri exists(std::vector<int> vars, std::vector<const CNode*> conj, std::vector<LineId>& env);
  Tri search(const std::vector<int>& vars, const std::vector<const CNode*>& conj, const std::vector<int>& level,
             std::size_t idx, std::vector<LineId>& env);
  Tri forall(std::vector<int> vars, std::vector<const CNode*> disj, std::vector<LineId>& env);
  bool tick();
  const Compiled& compiled(const std::string& name);
  std::unique_ptr<Compiled> compile(const Definition& d, const std::vector<std::string>& extra_free);
  pred::EvalResult result(Tri v);

  const Instance& inst_;
  const IntersectionModel& m_;
  DslOptions opt_;
  std::map<std::string, std::unique_ptr<Compiled>> defs_;
  std::vector<std::unique_ptr<Compiled>> adhoc_;
  std::unordered_map<std::string, Tri> memo_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
};

}  // namespace lig::dsl
