#include "lig/dsl/lint.hpp"

#include <set>

namespace lig::dsl {

namespace {

void walk(const NodePtr& f, const PositivityFlags& flags, const Resolver& resolve, const std::string& via,
          std::set<std::string>& seen, std::vector<Violation>& out) {
  auto flag = [&](const char* what) { out.push_back({what, via, f->line, f->column, print(f)}); };
  switch (f->kind) {
    case NodeKind::Not: flag("negation"); break;
    case NodeKind::Eq:
      if (!flags.allow_eq) flag("eq atom");
      break;
    case NodeKind::Neq:
      if (!flags.allow_neq) flag("neq atom");
      break;
    case NodeKind::PredRef: {
      if (!resolve) break;
      const Definition* d = resolve(f->name);
      if (d == nullptr) {
        flag("unresolved");
        break;
      }
      if (seen.insert(d->name).second)
        walk(d->body, flags, resolve, via.empty() ? d->name : via + " > " + d->name, seen, out);
      break;
    }
    default: break;
  }
  for (const auto& k : f->kids) walk(k, flags, resolve, via, seen, out);
}

}  // namespace

std::vector<Violation> check_positive(const NodePtr& f, const PositivityFlags& flags, const Resolver& resolve) {
  std::vector<Violation> out;
  std::set<std::string> seen;
  walk(f, flags, resolve, "", seen, out);
  return out;
}

std::vector<Violation> check_positive(const Definition& d, const PositivityFlags& flags, const Resolver& resolve) {
  std::vector<Violation> out;
  std::set<std::string> seen{d.name};
  walk(d.body, flags, resolve, "", seen, out);
  return out;
}

std::string to_string(const Violation& v) {
  std::string s = v.what + " at " + std::to_string(v.line) + ":" + std::to_string(v.column) + " in " + v.text;
  if (!v.via.empty()) s += " (via " + v.via + ")";
  return s;
}

}  // namespace lig::dsl
