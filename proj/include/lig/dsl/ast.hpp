#pragma once

#include <memory>
#include <set>
#include <string>
#include <vector>

namespace lig::dsl {

enum class NodeKind { Forall, Exists, And, Or, Not, Sim, Eq, Neq, True, False, PredRef };

const char* to_string(NodeKind k);

struct Node;
using NodePtr = std::shared_ptr<const Node>;

struct Node {
  NodeKind kind = NodeKind::True;
  std::vector<std::string> vars;  // bound variables (quantifiers) or atom/PredRef arguments
  std::vector<NodePtr> kids;
  std::string name;  // PredRef target
  int line = 0, column = 0;

  bool is_atom() const { return kind == NodeKind::Sim || kind == NodeKind::Eq || kind == NodeKind::Neq; }
  bool is_quantifier() const { return kind == NodeKind::Forall || kind == NodeKind::Exists; }
};

NodePtr make_atom(NodeKind k, std::string a, std::string b, int line = 0, int col = 0);
NodePtr make_const(bool v);
NodePtr make_nary(NodeKind k, std::vector<NodePtr> kids);
NodePtr make_quant(NodeKind k, std::vector<std::string> vars, NodePtr body);
NodePtr make_not(NodePtr kid, int line = 0, int col = 0);
NodePtr make_ref(std::string name, std::vector<std::string> args, int line = 0, int col = 0);

/// Structural equality, ignoring source positions.
bool same(const NodePtr& a, const NodePtr& b);

/// Free variables, sorted.
std::set<std::string> free_vars(const NodePtr& f);

/// Prints in the input grammar without sugar; parse(print(f)) is structurally f.
std::string print(const NodePtr& f);

struct PositivityFlags {
  bool allow_eq = false;
  bool allow_neq = false;
  bool operator==(const PositivityFlags&) const = default;
};

struct Definition {
  std::string name;
  std::vector<std::string> params;
  NodePtr body;
};

std::string print(const Definition& d);

}  // namespace lig::dsl
