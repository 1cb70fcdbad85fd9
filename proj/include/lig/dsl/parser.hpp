#pragma once

#include <string>

#include "lig/dsl/ast.hpp"

namespace lig::dsl {

/// Parses `Name(params) := body`. `line0` offsets reported line numbers.
/// Throws ParseError (with the expected set in the message) or
/// Error(UnboundVariable).
Definition parse_definition(const std::string& text, int line0 = 1);

/// Parses a bare formula; free variables are allowed.
NodePtr parse_formula(const std::string& text, int line0 = 1);

}  // namespace lig::dsl
