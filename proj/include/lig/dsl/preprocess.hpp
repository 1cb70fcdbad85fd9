#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lig/core/params.hpp"
#include "lig/dsl/ast.hpp"

namespace lig::dsl {

using Env = std::map<std::string, long>;

/// Where a corpus entry applies, e.g. "projective n>=4 even | affine n>=3".
class Guard {
 public:
  struct Cond {
    std::string var;  // n, q, lines
    std::string op;   // >= <= == > < !=
    long value = 0;
  };
  struct Alt {
    std::optional<SpaceKind> kind;  // empty = any
    std::optional<int> parity;      // 0 even, 1 odd
    std::vector<Cond> conds;
  };

  static Guard parse(const std::string& text);
  static Guard any() { return parse("any"); }

  bool admits(const SpaceParams& p) const;
  const std::string& text() const { return text_; }

 private:
  std::string text_;
  std::vector<Alt> alts_;
};

/// One corpus file after directive stripping; the body still has templates.
struct SourceUnit {
  std::string origin;
  std::string name;
  Guard guard = Guard::any();
  PositivityFlags flags;
  bool audit_only = false;
  std::vector<std::pair<std::string, std::string>> lets;  // in order, unevaluated
  std::string body;
  int body_line = 1;
};

/// Splits directives (#name, #guard, #flags, #param, #let, #audit-only)
/// from the definition text and drops // comments.
SourceUnit read_unit(const std::string& text, const std::string& origin = "<input>");

/// n, q, m, r, k, p for the space, then the unit's lets in order.
Env make_env(const SpaceParams& p, const SourceUnit& u);

long eval_int(const std::string& expr, const Env& env);

/// Expands `[ body for i in lo..hi join SEP ]` families and `{expr}`
/// holes. SEP is one of & | , sp.
std::string expand(const std::string& text, const Env& env);

}  // namespace lig::dsl
