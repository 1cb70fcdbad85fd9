// linegeo: build spaces, evaluate the defined predicates, run sweeps.
//
// Exit codes: 0 clean, 1 disagreement, 2 unknowns (without
// --allow-unknown), 64 usage, 65 bad input data, 70 internal error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "lig/dsl/corpus.hpp"
#include "lig/dsl/ast.hpp"
#include "lig/geometry/model_bridge.hpp"
#include "lig/geometry/space_io.hpp"
#include "lig/model/graph_io.hpp"
#include "lig/verify/audit.hpp"
#include "lig/verify/automorphism.hpp"
#include "lig/verify/corpus_check.hpp"
#include "lig/verify/verify.hpp"

using namespace lig;
using namespace lig::verify;

namespace {

constexpr int kUsage = 64;
constexpr int kData = 65;
constexpr int kInternal = 70;

struct Common {
  std::string space = "pg:3:2";
  bool json = false;
  std::string out;
};

void emit(const Common& c, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(c.out);
  if (!f) throw Error(ErrorCode::Usage, "cannot write " + c.out);
  f << text;
}

pred::EvalBudget budget_of(const std::string& mode, std::uint64_t nodes, std::uint64_t seed) {
  pred::EvalBudget b;
  b.mode = pred::parse_mode(mode);
  b.max_nodes = nodes;
  b.seed = seed;
  return b;
}

std::vector<LineId> parse_ids(const std::vector<std::string>& args) {
  std::vector<LineId> out;
  for (const auto& a : args) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(a.c_str(), &end, 10);
    if (a.empty() || *end != '\0') throw Error(ErrorCode::Usage, "line id expected, got '" + a + "'");
    out.push_back(static_cast<LineId>(v));
  }
  return out;
}

int cmd_space_build(const Common& c) {
  const SpaceParams p = parse_space_label(c.space);
  auto b = std::make_unique<SpaceBundle>(p);
  std::size_t edges = 0, dmin = SIZE_MAX, dmax = 0;
  for (LineId l = 0; l < b->model.line_count(); ++l) {
    const std::size_t d = b->model.degree(l);
    edges += d;
    dmin = std::min(dmin, d);
    dmax = std::max(dmax, d);
  }
  edges /= 2;
  if (c.json) {
    Json j;
    j["space"] = p.label();
    j["points"] = b->space.point_count();
    j["lines"] = b->space.line_count();
    j["intersecting_pairs"] = edges;
    j["degree_min"] = dmin;
    j["degree_max"] = dmax;
    j["m"] = p.m;
    j["r"] = p.r;
    j["k"] = p.k;
    emit(c, j.dump(2) + "\n");
  } else {
    std::ostringstream o;
    o << p.label() << ": " << b->space.point_count() << " points, " << b->space.line_count() << " lines, " << edges
      << " intersecting pairs, degree " << dmin << (dmin == dmax ? "" : ".." + std::to_string(dmax)) << "\n";
    emit(c, o.str());
  }
  return 0;
}

int cmd_space_export(const Common& c, const std::string& what) {
  const SpaceParams p = parse_space_label(c.space);
  auto s = geometry::Space::build(p.kind, p.n, p.q);
  std::ostringstream o;
  if (what == "graph") {
    export_graph(geometry::model_from_space(s), o);
  } else if (what == "incidence") {
    geometry::export_space(s, o);
  } else {
    throw Error(ErrorCode::Usage, "export what: graph or incidence");
  }
  emit(c, o.str());
  return 0;
}

int cmd_predicate_eval(const Common& c, const std::string& name, const std::vector<std::string>& args,
                       const std::string& mode, std::uint64_t nodes) {
  auto b = make_bundle(c.space);
  const PredicateSpec& spec = find_predicate(name);
  const auto ids = parse_ids(args);
  const pred::EvalResult r = evaluate(spec, *b, ids, budget_of(mode, nodes, 0));
  if (c.json) {
    Json j;
    j["space"] = c.space;
    j["predicate"] = name;
    j["args"] = ids;
    j["value"] = to_string(r.value);
    Json w = Json::object();
    for (const auto& x : r.witnesses) w[x.var] = x.value;
    j["witnesses"] = w;
    j["nodes"] = r.nodes_used;
    if (!r.note.empty()) j["note"] = r.note;
    emit(c, j.dump(2) + "\n");
  } else {
    std::ostringstream o;
    o << to_string(r.value);
    for (const auto& x : r.witnesses) o << " " << x.var << "=" << x.value;
    if (!r.note.empty()) o << "  (" << r.note << ")";
    o << "\n";
    emit(c, o.str());
  }
  return 0;
}

int cmd_predicate_list(const Common& c) {
  const SpaceParams p = parse_space_label(c.space);
  std::ostringstream o;
  for (const auto& s : registry())
    o << (s.admits(p) ? "  " : "- ") << s.name << "/" << s.arity(p) << "  vs " << s.oracle_name << "  ["
      << s.guard_text << "]" << (s.literal ? "  printed form" : "") << "\n";
  emit(c, o.str());
  return 0;
}

struct VerifyArgs {
  std::string predicate;
  std::string scope = "exhaustive";
  std::string filter = "none";
  std::string mode = "guided-then-blind";
  std::uint64_t budget = 200'000'000;
  std::uint64_t seed = 1;
  std::uint64_t cross_check = 1000;
  bool ordered = false;
  bool allow_unknown = false;
  bool progress = false;
  unsigned workers = 0;
};

int cmd_verify(const Common& c, const VerifyArgs& v) {
  auto b = make_bundle(c.space, v.seed);
  const PredicateSpec& spec = find_predicate(v.predicate);
  Scope scope = Scope::parse(v.scope);
  scope.seed = v.seed;
  scope.filter = parse_filter(v.filter);
  scope.reduce_symmetry = !v.ordered;
  scope.cross_check = v.cross_check;
  VerifyOptions opt;
  opt.budget = budget_of(v.mode, v.budget, v.seed);
  opt.workers = v.workers;
  if (v.progress)
    opt.progress = [](std::size_t d, std::size_t n) { std::cerr << "\r" << d << "/" << n << std::flush; };
  const VerificationReport r = lig::verify::verify(spec, *b, scope, opt);
  if (v.progress) std::cerr << "\n";
  emit(c, c.json ? to_json(r).dump(2) + "\n" : to_text(r));
  return exit_code(r, v.allow_unknown);
}

int cmd_corpus_check(const Common& c, const CorpusCheckOptions& opt, const std::string& dir) {
  auto b = make_bundle(c.space);
  const dsl::Corpus corpus = dir.empty() ? dsl::Corpus::builtin() : dsl::Corpus::load_dir(dir);
  const CorpusCheckReport r = corpus_check(corpus, *b, opt);
  emit(c, c.json ? to_json(r).dump(2) + "\n" : to_text(r));
  return r.ok() ? 0 : 1;
}

int cmd_corpus_show(const Common& c, const std::string& dir) {
  const dsl::Corpus corpus = dir.empty() ? dsl::Corpus::builtin() : dsl::Corpus::load_dir(dir);
  const dsl::Instance inst = corpus.instantiate(parse_space_label(c.space));
  std::ostringstream o;
  for (const auto& e : inst.entries()) o << dsl::print(e.def) << "\n";
  emit(c, o.str());
  return 0;
}

int cmd_auto_count(const Common& c, const std::string& graph, std::size_t cap) {
  std::unique_ptr<IntersectionModel> m;
  if (!graph.empty()) {
    std::ifstream f(graph);
    if (!f) throw Error(ErrorCode::Usage, "cannot read " + graph);
    m = std::make_unique<IntersectionModel>(import_graph(f));
  } else {
    const SpaceParams p = parse_space_label(c.space);
    auto s = geometry::Space::build(p.kind, p.n, p.q);
    m = std::make_unique<IntersectionModel>(geometry::model_from_space(s));
  }
  const AutomorphismResult r = automorphism_count(*m, cap);
  if (c.json) {
    Json j;
    j["lines"] = m->line_count();
    j["order"] = r.order;
    j["orbit_sizes"] = r.orbit_sizes;
    j["base"] = r.base;
    emit(c, j.dump(2) + "\n");
  } else {
    std::ostringstream o;
    o << r.order << "\n";
    emit(c, o.str());
  }
  return 0;
}

int cmd_report(const Common& c, const std::string& file, bool allow_unknown) {
  std::ifstream f(file);
  if (!f) throw Error(ErrorCode::Usage, "cannot read " + file);
  Json j;
  try {
    j = Json::parse(f);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("not JSON: ") + e.what());
  }
  const VerificationReport r = report_from_json(j);
  emit(c, c.json ? to_json(r).dump(2) + "\n" : to_text(r));
  return exit_code(r, allow_unknown);
}

int code_for(const Error& e) {
  switch (e.code()) {
    case ErrorCode::Usage:
    case ErrorCode::GuardMismatch:
    case ErrorCode::InvalidId:
    case ErrorCode::WrongDimension:
    case ErrorCode::NonPrimeField:
    case ErrorCode::DimensionTooSmall:
    case ErrorCode::ModelTooLarge:
      return kUsage;
    case ErrorCode::ParseError:
    case ErrorCode::AsymmetricAdjacency:
    case ErrorCode::UnresolvedPredRef:
    case ErrorCode::UnboundVariable:
      return kData;
    default:
      return kInternal;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"linegeo: line-intersection geometry toolkit"};
  app.require_subcommand(1);
  Common c;
  auto common = [&](CLI::App* sub, bool with_space = true) {
    if (with_space) sub->add_option("--space", c.space, "pg:<n>:<q> or ag:<n>:<q>")->capture_default_str();
    sub->add_flag("--json", c.json, "machine-readable output");
    sub->add_option("--out", c.out, "write output to a file");
  };

  auto* space = app.add_subcommand("space", "build or export a space");
  space->require_subcommand(1);
  auto* space_build = space->add_subcommand("build", "build and summarize");
  common(space_build);
  std::string export_what = "graph";
  auto* space_export = space->add_subcommand("export", "write the ~ graph or the incidence table");
  common(space_export);
  space_export->add_option("--what", export_what, "graph or incidence")->capture_default_str();

  auto* predicate = app.add_subcommand("predicate", "evaluate a defined predicate");
  predicate->require_subcommand(1);
  auto* pred_eval = predicate->add_subcommand("eval", "evaluate on given line ids");
  std::string pname, pmode = "guided-then-blind";
  std::vector<std::string> pargs;
  std::uint64_t pbudget = 200'000'000;
  pred_eval->add_option("name", pname, "predicate name")->required();
  pred_eval->add_option("args", pargs, "line ids");
  pred_eval->add_option("--mode", pmode, "blind, guided, guided-then-blind")->capture_default_str();
  pred_eval->add_option("--budget", pbudget, "node budget")->capture_default_str();
  common(pred_eval);
  auto* pred_list = predicate->add_subcommand("list", "list predicates and guards");
  common(pred_list);

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "sweep a predicate against its oracle");
  verify->add_option("predicate", va.predicate, "predicate name")->required();
  verify->add_option("--scope", va.scope, "exhaustive, sampled:<N>, orbit")->capture_default_str();
  verify->add_option("--filter", va.filter, "none, meeting, disjoint, skew (first two arguments)")
      ->capture_default_str();
  verify->add_option("--budget", va.budget, "node budget per tuple")->capture_default_str();
  verify->add_option("--mode", va.mode, "blind, guided, guided-then-blind")->capture_default_str();
  verify->add_option("--seed", va.seed, "sampling seed")->capture_default_str();
  verify->add_option("--cross-check", va.cross_check, "orbit scope: sampled tuples outside the representatives")
      ->capture_default_str();
  verify->add_option("--workers", va.workers, "worker threads (default LIG_WORKERS or all cores)");
  verify->add_flag("--ordered", va.ordered, "no argument-symmetry reduction");
  verify->add_flag("--allow-unknown", va.allow_unknown, "exit 0 despite unknowns");
  verify->add_flag("--progress", va.progress, "progress on stderr");
  common(verify);

  auto* corpus = app.add_subcommand("corpus", "formula corpus");
  corpus->require_subcommand(1);
  CorpusCheckOptions co;
  std::string corpus_dir;
  auto* corpus_check_cmd = corpus->add_subcommand("check", "corpus against the hand-coded evaluators");
  corpus_check_cmd->add_option("--samples", co.samples, "tuples per entry above arity 3")->capture_default_str();
  corpus_check_cmd->add_option("--seed", co.seed, "sampling seed")->capture_default_str();
  corpus_check_cmd->add_option("--only", co.only, "restrict to these corpus names");
  corpus_check_cmd->add_option("--workers", co.workers, "worker threads");
  corpus_check_cmd->add_option("--dir", corpus_dir, "corpus directory (default: shipped corpus)");
  common(corpus_check_cmd);
  auto* corpus_show = corpus->add_subcommand("show", "print the expanded definitions for a space");
  corpus_show->add_option("--dir", corpus_dir, "corpus directory");
  common(corpus_show);

  auto* autom = app.add_subcommand("auto", "automorphisms of the ~ graph");
  autom->require_subcommand(1);
  std::string graph_file;
  std::size_t cap = kAutomorphismCap;
  auto* auto_count = autom->add_subcommand("count", "order of the automorphism group");
  auto_count->add_option("--graph", graph_file, "graph file from `space export` instead of --space");
  auto_count->add_option("--cap", cap, "largest model accepted")->capture_default_str();
  common(auto_count);

  std::string report_file;
  bool report_allow_unknown = false;
  auto* report = app.add_subcommand("report", "render a saved JSON report");
  report->add_option("file", report_file, "report JSON")->required();
  report->add_flag("--allow-unknown", report_allow_unknown, "exit 0 despite unknowns");
  common(report, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (space_build->parsed()) return cmd_space_build(c);
    if (space_export->parsed()) return cmd_space_export(c, export_what);
    if (pred_eval->parsed()) return cmd_predicate_eval(c, pname, pargs, pmode, pbudget);
    if (pred_list->parsed()) return cmd_predicate_list(c);
    if (verify->parsed()) return cmd_verify(c, va);
    if (corpus_check_cmd->parsed()) return cmd_corpus_check(c, co, corpus_dir);
    if (corpus_show->parsed()) return cmd_corpus_show(c, corpus_dir);
    if (auto_count->parsed()) return cmd_auto_count(c, graph_file, cap);
    if (report->parsed()) return cmd_report(c, report_file, report_allow_unknown);
  } catch (const Error& e) {
    std::cerr << "linegeo: " << to_string(e.code()) << ": " << e.what() << "\n";
    return code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "linegeo: " << e.what() << "\n";
    return kInternal;
  }
  return kUsage;
}
