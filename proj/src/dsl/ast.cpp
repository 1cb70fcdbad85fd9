#include "lig/dsl/ast.hpp"

#include <sstream>

namespace lig::dsl {

const char* to_string(NodeKind k) {
  switch (k) {
    case NodeKind::Forall: return "forall";
    case NodeKind::Exists: return "exists";
    case NodeKind::And: return "and";
    case NodeKind::Or: return "or";
    case NodeKind::Not: return "not";
    case NodeKind::Sim: return "sim";
    case NodeKind::Eq: return "eq";
    case NodeKind::Neq: return "neq";
    case NodeKind::True: return "true";
    case NodeKind::False: return "false";
    case NodeKind::PredRef: return "predref";
  }
  return "?";
}

NodePtr make_atom(NodeKind k, std::string a, std::string b, int line, int col) {
  auto n = std::make_shared<Node>();
  n->kind = k;
  n->vars = {std::move(a), std::move(b)};
  n->line = line;
  n->column = col;
  return n;
}

NodePtr make_const(bool v) {
  auto n = std::make_shared<Node>();
  n->kind = v ? NodeKind::True : NodeKind::False;
  return n;
}

NodePtr make_nary(NodeKind k, std::vector<NodePtr> kids) {
  if (kids.size() == 1) return kids[0];
  if (kids.empty()) return make_const(k == NodeKind::And);
  auto n = std::make_shared<Node>();
  n->kind = k;
  n->kids = std::move(kids);
  return n;
}

NodePtr make_quant(NodeKind k, std::vector<std::string> vars, NodePtr body) {
  if (vars.empty()) return body;
  auto n = std::make_shared<Node>();
  n->kind = k;
  n->vars = std::move(vars);
  n->kids = {std::move(body)};
  return n;
}

NodePtr make_not(NodePtr kid, int line, int col) {
  auto n = std::make_shared<Node>();
  n->kind = NodeKind::Not;
  n->line = line;
  n->column = col;
  n->kids = {std::move(kid)};
  return n;
}

NodePtr make_ref(std::string name, std::vector<std::string> args, int line, int col) {
  auto n = std::make_shared<Node>();
  n->kind = NodeKind::PredRef;
  n->name = std::move(name);
  n->vars = std::move(args);
  n->line = line;
  n->column = col;
  return n;
}

bool same(const NodePtr& a, const NodePtr& b) {
  if (a->kind != b->kind || a->vars != b->vars || a->name != b->name || a->kids.size() != b->kids.size())
    return false;
  for (std::size_t i = 0; i < a->kids.size(); ++i)
    if (!same(a->kids[i], b->kids[i])) return false;
  return true;
}

namespace {

void collect_free(const NodePtr& f, std::set<std::string>& bound, std::set<std::string>& out) {
  if (f->is_quantifier()) {
    std::vector<std::string> added;
    for (const auto& v : f->vars)
      if (bound.insert(v).second) added.push_back(v);
    collect_free(f->kids[0], bound, out);
    for (const auto& v : added) bound.erase(v);
    return;
  }
  if (f->is_atom() || f->kind == NodeKind::PredRef) {
    for (const auto& v : f->vars)
      if (!bound.count(v)) out.insert(v);
    return;
  }
  for (const auto& k : f->kids) collect_free(k, bound, out);
}

void print_to(std::ostream& os, const NodePtr& f, bool operand) {
  switch (f->kind) {
    case NodeKind::True: os << "true"; return;
    case NodeKind::False: os << "false"; return;
    case NodeKind::Sim:
    case NodeKind::Eq:
    case NodeKind::Neq:
      os << to_string(f->kind) << '(' << f->vars[0] << ", " << f->vars[1] << ')';
      return;
    case NodeKind::PredRef: {
      os << f->name << '(';
      for (std::size_t i = 0; i < f->vars.size(); ++i) os << (i ? ", " : "") << f->vars[i];
      os << ')';
      return;
    }
    case NodeKind::Not:
      os << '!';
      print_to(os, f->kids[0], true);
      return;
    case NodeKind::Forall:
    case NodeKind::Exists: {
      if (operand) os << '(';
      os << to_string(f->kind);
      for (const auto& v : f->vars) os << ' ' << v;
      os << " . ";
      print_to(os, f->kids[0], false);
      if (operand) os << ')';
      return;
    }
    case NodeKind::And:
    case NodeKind::Or: {
      if (operand) os << '(';
      const char* op = f->kind == NodeKind::And ? " & " : " | ";
      for (std::size_t i = 0; i < f->kids.size(); ++i) {
        if (i) os << op;
        print_to(os, f->kids[i], true);
      }
      if (operand) os << ')';
      return;
    }
  }
}

}  // namespace

std::set<std::string> free_vars(const NodePtr& f) {
  std::set<std::string> bound, out;
  collect_free(f, bound, out);
  return out;
}

std::string print(const NodePtr& f) {
  std::ostringstream os;
  print_to(os, f, false);
  return os.str();
}

std::string print(const Definition& d) {
  std::ostringstream os;
  os << d.name << '(';
  for (std::size_t i = 0; i < d.params.size(); ++i) os << (i ? ", " : "") << d.params[i];
  os << ") := " << print(d.body);
  return os.str();
}

}  // namespace lig::dsl
