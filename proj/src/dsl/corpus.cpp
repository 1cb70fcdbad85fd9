#include "lig/dsl/corpus.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "lig/dsl/parser.hpp"

namespace lig::dsl {

namespace fs = std::filesystem;

const Instance::Entry* Instance::find(const std::string& name) const {
  for (const Entry& e : entries_)
    if (e.def.name == name) return &e;
  return nullptr;
}

Resolver Instance::resolver() const {
  return [this](const std::string& name) -> const Definition* {
    const Entry* e = find(name);
    return e ? &e->def : nullptr;
  };
}

std::vector<std::pair<std::string, std::vector<Violation>>> Instance::lint() const {
  std::vector<std::pair<std::string, std::vector<Violation>>> out;
  for (const Entry& e : entries_) out.emplace_back(e.def.name, check_positive(e.def, e.unit->flags, resolver()));
  return out;
}

std::string builtin_corpus_dir() {
  if (const char* env = std::getenv("LIG_CORPUS_DIR")) return env;
#ifdef LIG_CORPUS_DIR
  return LIG_CORPUS_DIR;
#else
  return "corpus";
#endif
}

Corpus Corpus::load_dir(const std::string& dir) {
  std::vector<fs::path> files;
  if (!fs::is_directory(dir)) throw Error(ErrorCode::Usage, "corpus directory not found: " + dir);
  for (const auto& e : fs::directory_iterator(dir))
    if (e.is_regular_file() && e.path().extension() == ".fo") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  std::vector<std::pair<std::string, std::string>> src;
  for (const auto& f : files) {
    std::ifstream in(f);
    std::stringstream ss;
    ss << in.rdbuf();
    src.emplace_back(f.filename().string(), ss.str());
  }
  return from_sources(src);
}

Corpus Corpus::builtin() { return load_dir(builtin_corpus_dir()); }

Corpus Corpus::from_sources(const std::vector<std::pair<std::string, std::string>>& files) {
  Corpus c;
  for (const auto& [origin, text] : files) c.units_.push_back(read_unit(text, origin));
  return c;
}

const SourceUnit* Corpus::unit(const std::string& name) const {
  for (const SourceUnit& u : units_)
    if (u.name == name) return &u;
  return nullptr;
}

namespace {

void check_refs(const NodePtr& f, const Instance& inst, const std::string& origin) {
  if (f->kind == NodeKind::PredRef) {
    const Instance::Entry* e = inst.find(f->name);
    if (e == nullptr)
      throw Error(ErrorCode::UnresolvedPredRef, origin + ": " + f->name + " is not defined before use");
    if (e->def.params.size() != f->vars.size())
      throw Error(ErrorCode::UnresolvedPredRef, origin + ": " + f->name + " takes " +
                                                    std::to_string(e->def.params.size()) + " arguments, got " +
                                                    std::to_string(f->vars.size()));
  }
  for (const auto& k : f->kids) check_refs(k, inst, origin);
}

}  // namespace

Instance Corpus::instantiate(const SpaceParams& p) const {
  Instance inst;
  inst.params_ = p;
  for (const SourceUnit& u : units_) {
    if (!u.guard.admits(p)) continue;
    const std::string text = expand(u.body, make_env(p, u));
    Definition d;
    try {
      d = parse_definition(text, u.body_line);
    } catch (const ParseError& e) {
      throw ParseError(e.line(), e.column(), u.origin + ": " + e.what());
    }
    if (!u.name.empty() && u.name != d.name)
      throw ParseError(u.body_line, 1, u.origin + ": #name " + u.name + " does not match definition " + d.name);
    if (inst.find(d.name)) throw ParseError(u.body_line, 1, u.origin + ": duplicate definition " + d.name);
    check_refs(d.body, inst, u.origin);
    inst.entries_.push_back({&u, std::move(d)});
  }
  return inst;
}

}  // namespace lig::dsl
