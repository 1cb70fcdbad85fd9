#pragma once

#include <functional>
#include <string>
#include <vector>

#include "lig/dsl/ast.hpp"

namespace lig::dsl {

struct Violation {
  std::string what;  // "negation", "eq atom", "neq atom", "unresolved"
  std::string via;   // definition chain when found through a PredRef
  int line = 0, column = 0;
  std::string text;
};

/// Looks up an earlier definition by name; nullptr if unknown.
using Resolver = std::function<const Definition*(const std::string&)>;

/// Empty iff the formula, and everything it reaches through PredRefs, is
/// positive under the flags.
std::vector<Violation> check_positive(const NodePtr& f, const PositivityFlags& flags, const Resolver& resolve = {});
std::vector<Violation> check_positive(const Definition& d, const PositivityFlags& flags,
                                      const Resolver& resolve = {});

std::string to_string(const Violation& v);

}  // namespace lig::dsl
