#pragma once

#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "lig/core/params.hpp"
#include "lig/geometry/space.hpp"
#include "lig/model/intersection_model.hpp"
#include "lig/model/predicate_table.hpp"
#include "lig/predicates/evaluator.hpp"
#include "lig/witness/guided_context.hpp"

namespace lig::verify {

/// A built space with its model, the shared memo table and a coordinate
/// provider. Not movable: the members refer to each other.
class SpaceBundle {
 public:
  explicit SpaceBundle(const SpaceParams& p, std::uint64_t seed = 0);
  SpaceBundle(const SpaceBundle&) = delete;
  SpaceBundle& operator=(const SpaceBundle&) = delete;

  const SpaceParams& params() const { return space.params(); }

  geometry::Space space;
  IntersectionModel model;
  PredicateTable table;
  witness::GeometricProvider provider;
};

std::unique_ptr<SpaceBundle> make_bundle(const std::string& label, std::uint64_t seed = 0);

/// Where tuples come from.
enum class Source {
  Lines,        // any tuple of line ids
  TriplePairs,  // two T-triples, flattened to six ids
  Nullary,      // sentences
};

/// Argument symmetry used to shrink exhaustive sweeps.
enum class Symmetry { None, Full, FirstTwo };

using Args = std::span<const LineId>;

struct PredicateSpec {
  std::string name;
  std::string oracle_name;
  std::string guard_text;
  Source source = Source::Lines;
  Symmetry symmetry = Symmetry::None;
  /// Printed form known to differ from the proof; reported as such.
  bool literal = false;

  std::function<bool(const SpaceParams&)> admits;
  std::function<unsigned(const SpaceParams&)> arity;
  std::function<pred::EvalResult(pred::Evaluator&, Args)> defined;
  std::function<bool(const geometry::Space&, Args)> oracle;
};

const std::vector<PredicateSpec>& registry();
/// Throws Error(Usage) for an unknown name.
const PredicateSpec& find_predicate(const std::string& name);
std::vector<std::string> predicate_names();

/// Throws GuardMismatch if the predicate is not defined on the space.
void require_guard(const PredicateSpec& spec, const SpaceParams& p);

}  // namespace lig::verify
