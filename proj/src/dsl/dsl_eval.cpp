#include "lig/dsl/dsl_eval.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace lig::dsl {

struct DslEvaluator::CNode {
  NodeKind kind = NodeKind::True;
  std::vector<int> slots;  // atom / PredRef arguments, or bound variables
  std::vector<std::unique_ptr<CNode>> kids;
  const Compiled* callee = nullptr;
  std::string callee_name;
  std::vector<int> uses;  // sorted free slots
};

struct DslEvaluator::Compiled {
  std::string name;
  std::size_t arity = 0;
  std::size_t slots = 0;
  std::unique_ptr<CNode> body;
};

namespace {

void flatten(const DslEvaluator::CNode* n, NodeKind k, std::vector<const DslEvaluator::CNode*>& out) {
  if (n->kind == k) {
    for (const auto& c : n->kids) flatten(c.get(), k, out);
  } else {
    out.push_back(n);
  }
}

bool uses_any(const DslEvaluator::CNode* n, const std::vector<int>& vars) {
  for (int v : vars)
    if (std::binary_search(n->uses.begin(), n->uses.end(), v)) return true;
  return false;
}

std::vector<int> restrict_to(const std::vector<int>& vars, const DslEvaluator::CNode* n) {
  std::vector<int> out;
  for (int v : vars)
    if (std::binary_search(n->uses.begin(), n->uses.end(), v)) out.push_back(v);
  return out;
}

}  // namespace

DslEvaluator::DslEvaluator(const Instance& inst, const IntersectionModel& model, DslOptions opt)
    : inst_(inst), m_(model), opt_(opt) {}

DslEvaluator::~DslEvaluator() = default;

std::unique_ptr<DslEvaluator::Compiled> DslEvaluator::compile(const Definition& d,
                                                              const std::vector<std::string>& extra_free) {
  auto c = std::make_unique<Compiled>();
  c->name = d.name;
  c->arity = d.params.size();
  std::vector<std::pair<std::string, int>> scope;
  int next = 0;
  for (const auto& p : d.params) scope.emplace_back(p, next++);
  for (const auto& p : extra_free) scope.emplace_back(p, next++);
  auto lookup = [&](const std::string& v) {
    for (auto it = scope.rbegin(); it != scope.rend(); ++it)
      if (it->first == v) return it->second;
    throw Error(ErrorCode::UnboundVariable, "unbound variable '" + v + "' in " + d.name);
  };
  std::function<std::unique_ptr<CNode>(const NodePtr&)> go = [&](const NodePtr& f) {
    auto n = std::make_unique<CNode>();
    n->kind = f->kind;
    std::vector<int> uses;
    if (f->is_quantifier()) {
      const std::size_t mark = scope.size();
      for (const auto& v : f->vars) {
        scope.emplace_back(v, next);
        n->slots.push_back(next++);
      }
      n->kids.push_back(go(f->kids[0]));
      scope.resize(mark);
      for (int u : n->kids[0]->uses)
        if (std::find(n->slots.begin(), n->slots.end(), u) == n->slots.end()) uses.push_back(u);
    } else if (f->is_atom() || f->kind == NodeKind::PredRef) {
      for (const auto& v : f->vars) n->slots.push_back(lookup(v));
      uses = n->slots;
      if (f->kind == NodeKind::PredRef) {
        n->callee_name = f->name;
        n->callee = &compiled(f->name);
        if (n->callee->arity != f->vars.size())
          throw Error(ErrorCode::UnresolvedPredRef, f->name + ": wrong number of arguments");
      }
    } else {
      for (const auto& k : f->kids) {
        n->kids.push_back(go(k));
        uses.insert(uses.end(), n->kids.back()->uses.begin(), n->kids.back()->uses.end());
      }
    }
    std::sort(uses.begin(), uses.end());
    uses.erase(std::unique(uses.begin(), uses.end()), uses.end());
    n->uses = std::move(uses);
    return n;
  };
  c->body = go(d.body);
  c->slots = static_cast<std::size_t>(next);
  return c;
}

const DslEvaluator::Compiled& DslEvaluator::compiled(const std::string& name) {
  if (auto it = defs_.find(name); it != defs_.end()) return *it->second;
  const Instance::Entry* e = inst_.find(name);
  if (e == nullptr) throw Error(ErrorCode::UnresolvedPredRef, "no definition " + name + " for " + inst_.params().label());
  auto c = compile(e->def, {});
  const Compiled& ref = *c;
  defs_.emplace(name, std::move(c));
  return ref;
}

bool DslEvaluator::tick() {
  if (exhausted_) return false;
  if (++nodes_ > opt_.max_nodes) {
    exhausted_ = true;
    return false;
  }
  return true;
}

pred::EvalResult DslEvaluator::result(Tri v) {
  pred::EvalResult r;
  r.value = exhausted_ && v != Tri::True ? Tri::Unknown : v;
  r.nodes_used = nodes_;
  return r;
}

pred::EvalResult DslEvaluator::eval(const std::string& name, const std::vector<LineId>& args) {
  const Compiled& c = compiled(name);
  if (args.size() != c.arity)
    throw Error(ErrorCode::WrongDimension, name + " takes " + std::to_string(c.arity) + " arguments");
  for (LineId a : args) m_.check(a);
  nodes_ = 0;
  exhausted_ = false;
  return result(call(c, args));
}

pred::EvalResult DslEvaluator::eval(const NodePtr& f, const std::map<std::string, LineId>& assignment) {
  Definition d;
  d.name = "<formula>";
  d.body = f;
  std::vector<LineId> args;
  for (const auto& [k, v] : assignment) {
    m_.check(v);
    d.params.push_back(k);
    args.push_back(v);
  }
  adhoc_.push_back(compile(d, {}));
  const Compiled& c = *adhoc_.back();
  nodes_ = 0;
  exhausted_ = false;
  std::vector<LineId> env(c.slots, 0);
  std::copy(args.begin(), args.end(), env.begin());
  return result(ev(*c.body, env));
}

Tri DslEvaluator::call(const Compiled& c, std::vector<LineId> args) {
  std::string key = c.name;
  key.push_back('\0');
  for (LineId a : args) key.append(reinterpret_cast<const char*>(&a), sizeof a);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  std::vector<LineId> env(c.slots, 0);
  std::copy(args.begin(), args.end(), env.begin());
  const Tri v = ev(*c.body, env);
  if (v != Tri::Unknown) memo_.emplace(std::move(key), v);
  return v;
}

Tri DslEvaluator::ev(const CNode& n, std::vector<LineId>& env) {
  switch (n.kind) {
    case NodeKind::True: return Tri::True;
    case NodeKind::False: return Tri::False;
    case NodeKind::Sim: return tri(m_.sim(env[n.slots[0]], env[n.slots[1]]));
    case NodeKind::Eq: return tri(m_.eq(env[n.slots[0]], env[n.slots[1]]));
    case NodeKind::Neq: return tri(!m_.eq(env[n.slots[0]], env[n.slots[1]]));
    case NodeKind::Not: {
      const Tri v = ev(*n.kids[0], env);
      return v == Tri::Unknown ? v : tri(v == Tri::False);
    }
    case NodeKind::And: {
      Tri acc = Tri::True;
      for (const auto& k : n.kids) {
        const Tri v = ev(*k, env);
        if (v == Tri::False) return v;
        if (v == Tri::Unknown) acc = v;
      }
      return acc;
    }
    case NodeKind::Or: {
      Tri acc = Tri::False;
      for (const auto& k : n.kids) {
        const Tri v = ev(*k, env);
        if (v == Tri::True) return v;
        if (v == Tri::Unknown) acc = v;
      }
      return acc;
    }
    case NodeKind::PredRef: {
      if (!tick()) return Tri::Unknown;
      std::vector<LineId> args;
      args.reserve(n.slots.size());
      for (int s : n.slots) args.push_back(env[s]);
      return call(*n.callee, std::move(args));
    }
    case NodeKind::Forall: {
      std::vector<const CNode*> disj;
      flatten(n.kids[0].get(), NodeKind::Or, disj);
      if (disj.size() == 1 && disj[0]->kind == NodeKind::And) {
        // forall distributes over the conjuncts
        std::vector<const CNode*> conj;
        flatten(disj[0], NodeKind::And, conj);
        Tri acc = Tri::True;
        for (const CNode* c : conj) {
          const Tri v = forall(restrict_to(n.slots, c), {c}, env);
          if (v == Tri::False) return v;
          if (v == Tri::Unknown) acc = v;
        }
        return acc;
      }
      return forall(n.slots, std::move(disj), env);
    }
    case NodeKind::Exists: {
      std::vector<const CNode*> conj;
      flatten(n.kids[0].get(), NodeKind::And, conj);
      if (conj.size() == 1 && conj[0]->kind == NodeKind::Or) {
        // exists distributes over the disjuncts
        std::vector<const CNode*> disj;
        flatten(conj[0], NodeKind::Or, disj);
        Tri acc = Tri::False;
        for (const CNode* d : disj) {
          const Tri v = exists(restrict_to(n.slots, d), {d}, env);
          if (v == Tri::True) return v;
          if (v == Tri::Unknown) acc = v;
        }
        return acc;
      }
      return exists(n.slots, std::move(conj), env);
    }
  }
  return Tri::Unknown;
}

Tri DslEvaluator::forall(std::vector<int> vars, std::vector<const CNode*> disj, std::vector<LineId>& env) {
  // unused variables range over a non-empty universe and drop out
  std::vector<int> live;
  for (int v : vars) {
    bool used = false;
    for (const CNode* d : disj) used = used || std::binary_search(d->uses.begin(), d->uses.end(), v);
    if (used) live.push_back(v);
  }
  vars = std::move(live);

  Tri acc = Tri::False;
  std::vector<const CNode*> rest;
  for (const CNode* d : disj) {
    if (uses_any(d, vars)) {
      rest.push_back(d);
      continue;
    }
    const Tri v = ev(*d, env);
    if (v == Tri::True) return v;
    if (v == Tri::Unknown) acc = v;
  }
  if (rest.empty() || vars.empty()) return acc;

  if (opt_.pigeonhole && acc == Tri::False) {
    // (forall x_1..x_t) OR_{i<j} x_i = x_j holds iff t exceeds the line count
    std::set<std::pair<int, int>> pairs;
    bool shape = true;
    for (const CNode* d : rest) {
      if (d->kind != NodeKind::Eq) {
        shape = false;
        break;
      }
      const int a = d->slots[0], b = d->slots[1];
      if (std::find(vars.begin(), vars.end(), a) == vars.end() || std::find(vars.begin(), vars.end(), b) == vars.end()) {
        shape = false;
        break;
      }
      pairs.emplace(std::min(a, b), std::max(a, b));
    }
    const std::size_t t = vars.size();
    if (shape && pairs.size() == t * (t - 1) / 2) return tri(t > m_.line_count());
  }

  const int v = vars.front();
  const std::vector<int> tail(vars.begin() + 1, vars.end());
  Tri out = Tri::True;
  for (LineId x = 0; x < m_.line_count(); ++x) {
    if (!tick()) return Tri::Unknown;
    env[v] = x;
    const Tri r = forall(tail, rest, env);
    if (r == Tri::False) return acc == Tri::Unknown ? Tri::Unknown : Tri::False;
    if (r == Tri::Unknown) out = r;
  }
  return out;
}

Tri DslEvaluator::exists(std::vector<int> vars, std::vector<const CNode*> conj, std::vector<LineId>& env) {
  std::vector<int> live;
  for (int v : vars) {
    bool used = false;
    for (const CNode* c : conj) used = used || std::binary_search(c->uses.begin(), c->uses.end(), v);
    if (used) live.push_back(v);
  }
  vars = std::move(live);
  // a disjunction with disjuncts free of this block's variables is settled
  // up front where possible
  Tri acc = Tri::True;
  for (std::size_t i = 0; i < conj.size(); ++i) {
    const CNode* c = conj[i];
    if (c->kind != NodeKind::Or || !uses_any(c, vars)) continue;
    std::vector<const CNode*> disj, open;
    flatten(c, NodeKind::Or, disj);
    bool sat = false, unknown = false;
    for (const CNode* d : disj) {
      if (uses_any(d, vars)) {
        open.push_back(d);
        continue;
      }
      const Tri v = ev(*d, env);
      sat = sat || v == Tri::True;
      unknown = unknown || v == Tri::Unknown;
      if (sat) break;
    }
    if (sat) {
      conj.erase(conj.begin() + static_cast<long>(i--));
      continue;
    }
    if (open.size() == disj.size()) continue;
    if (unknown) acc = Tri::Unknown;
    if (open.size() == 1) {
      std::vector<const CNode*> parts;
      flatten(open[0], NodeKind::And, parts);
      conj.erase(conj.begin() + static_cast<long>(i));
      conj.insert(conj.end(), parts.begin(), parts.end());
      --i;
    } else if (!open.empty() && !unknown) {
      // split the block over the remaining disjuncts
      Tri out = Tri::False;
      for (const CNode* d : open) {
        std::vector<const CNode*> branch = conj;
        branch.erase(branch.begin() + static_cast<long>(i));
        flatten(d, NodeKind::And, branch);
        const Tri v = exists(vars, std::move(branch), env);
        if (v == Tri::True) return v;
        if (v == Tri::Unknown) out = v;
      }
      return out;
    }
  }
  std::vector<int> level(conj.size(), 0);
  for (std::size_t i = 0; i < conj.size(); ++i)
    for (std::size_t j = 0; j < vars.size(); ++j)
      if (std::binary_search(conj[i]->uses.begin(), conj[i]->uses.end(), vars[j])) level[i] = static_cast<int>(j + 1);
  for (std::size_t i = 0; i < conj.size(); ++i) {
    if (level[i] != 0) continue;
    const Tri v = ev(*conj[i], env);
    if (v == Tri::False) return v;
    if (v == Tri::Unknown) acc = v;
  }
  const Tri r = search(vars, conj, level, 0, env);
  if (r == Tri::False) return Tri::False;
  return r == Tri::True ? acc : Tri::Unknown;
}

Tri DslEvaluator::search(const std::vector<int>& vars, const std::vector<const CNode*>& conj,
                         const std::vector<int>& level, std::size_t idx, std::vector<LineId>& env) {
  if (idx == vars.size()) return Tri::True;
  const int v = vars[idx];
  const int here = static_cast<int>(idx + 1);
  auto bound = [&](int s) {
    // bound already: not v and not a later variable of this block
    if (s == v) return false;
    return std::find(vars.begin() + static_cast<long>(idx) + 1, vars.end(), s) == vars.end();
  };
  LineSet cand = m_.universe();
  for (std::size_t i = 0; i < conj.size(); ++i) {
    if (level[i] != here) continue;
    const CNode* c = conj[i];
    auto other = [&](const CNode* a) -> int {
      if (a->slots[0] == v && bound(a->slots[1])) return a->slots[1];
      if (a->slots[1] == v && bound(a->slots[0])) return a->slots[0];
      return -1;
    };
    if (c->kind == NodeKind::Sim) {
      if (c->slots[0] == v && c->slots[1] == v) return Tri::False;
      if (int o = other(c); o >= 0) cand.and_words(m_.row(env[o]));
    } else if (c->kind == NodeKind::Eq) {
      if (int o = other(c); o >= 0) cand &= LineSet::of(m_.line_count(), {env[o]});
    } else if (c->kind == NodeKind::Or && c->kids.size() == 2 && c->kids[0]->kind == NodeKind::Sim &&
               c->kids[1]->kind == NodeKind::Eq && c->kids[0]->slots == c->kids[1]->slots) {
      if (int o = other(c->kids[0].get()); o >= 0) cand &= m_.closed_neighbors(env[o]);
    }
  }
  Tri out = Tri::False;
  const bool found = cand.any_of([&](LineId x) {
    if (!tick()) {
      out = Tri::Unknown;
      return true;
    }
    env[v] = x;
    bool unknown = false;
    for (std::size_t i = 0; i < conj.size(); ++i) {
      if (level[i] != here) continue;
      const Tri r = ev(*conj[i], env);
      if (r == Tri::False) return false;
      if (r == Tri::Unknown) unknown = true;
    }
    const Tri r = search(vars, conj, level, idx + 1, env);
    if (r == Tri::True && !unknown) return true;
    if (r != Tri::False) out = Tri::Unknown;
    return false;
  });
  if (found) return Tri::True;
  return out;
}

}  // namespace lig::dsl
