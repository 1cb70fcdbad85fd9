#include "lig/verify/report.hpp"

#include <sstream>

namespace lig::verify {

void Counts::add(Tri defined, bool oracle, std::uint64_t nodes_used) {
  ++total;
  nodes += nodes_used;
  if (oracle) ++oracle_true;
  if (defined == Tri::True) ++defined_true;
  if (defined == Tri::Unknown) {
    ++unknown;
    if (oracle) ++unknown_oracle_true;
  } else if ((defined == Tri::True) == oracle) {
    ++agree;
  } else {
    ++disagree;
  }
}

void Counts::merge(const Counts& o) {
  total += o.total;
  agree += o.agree;
  disagree += o.disagree;
  unknown += o.unknown;
  defined_true += o.defined_true;
  oracle_true += o.oracle_true;
  unknown_oracle_true += o.unknown_oracle_true;
  nodes += o.nodes;
}

std::uint64_t VerificationReport::disagreements() const {
  return counts.disagree + (cross_check ? cross_check->disagree : 0);
}

std::uint64_t VerificationReport::unknown_total() const {
  return counts.unknown + (cross_check ? cross_check->unknown : 0);
}

int exit_code(const VerificationReport& r, bool allow_unknown) {
  if (r.disagreements() > 0) return 1;
  if (r.unknown_total() > 0 && !allow_unknown) return 2;
  return 0;
}

Json to_json(const Counts& c) {
  Json j;
  j["total"] = c.total;
  j["agree"] = c.agree;
  j["disagree"] = c.disagree;
  j["unknown"] = c.unknown;
  j["defined_true"] = c.defined_true;
  j["oracle_true"] = c.oracle_true;
  j["unknown_oracle_true"] = c.unknown_oracle_true;
  j["nodes"] = c.nodes;
  return j;
}

Counts counts_from_json(const Json& j) {
  Counts c;
  c.total = j.at("total").get<std::uint64_t>();
  c.agree = j.at("agree").get<std::uint64_t>();
  c.disagree = j.at("disagree").get<std::uint64_t>();
  c.unknown = j.at("unknown").get<std::uint64_t>();
  c.defined_true = j.value("defined_true", std::uint64_t{0});
  c.oracle_true = j.value("oracle_true", std::uint64_t{0});
  c.unknown_oracle_true = j.value("unknown_oracle_true", std::uint64_t{0});
  c.nodes = j.value("nodes", std::uint64_t{0});
  return c;
}

namespace {

Tri parse_tri(const std::string& s) {
  if (s == "true") return Tri::True;
  if (s == "false") return Tri::False;
  return Tri::Unknown;
}

Json witness_json(const Witness& w) {
  Json j;
  j["tuple"] = w.tuple;
  j["defined"] = to_string(w.defined);
  j["oracle"] = w.oracle;
  j["index"] = w.index;
  j["nodes"] = w.nodes;
  j["transcript"] = w.transcript;
  return j;
}

Witness witness_from(const Json& j) {
  Witness w;
  w.tuple = j.at("tuple").get<std::vector<LineId>>();
  w.defined = parse_tri(j.at("defined").get<std::string>());
  w.oracle = j.at("oracle").get<bool>();
  w.index = j.value("index", std::size_t{0});
  w.nodes = j.value("nodes", std::uint64_t{0});
  w.transcript = j.value("transcript", std::string());
  return w;
}

Json witness_list(const std::vector<Witness>& ws) {
  Json a = Json::array();
  for (const auto& w : ws) a.push_back(witness_json(w));
  return a;
}

std::vector<Witness> witnesses_from(const Json& j, const char* key) {
  std::vector<Witness> out;
  if (j.contains(key))
    for (const auto& w : j.at(key)) out.push_back(witness_from(w));
  return out;
}

std::string tuple_text(const std::vector<LineId>& t) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i) s += (i ? " " : "") + std::to_string(t[i]);
  return s + ")";
}

}  // namespace

Json to_json(const VerificationReport& r, bool timing) {
  Json j;
  j["space"] = r.space.label();
  j["predicate"] = r.predicate;
  j["scope"] = r.scope;
  j["counts"] = to_json(r.counts);
  j["witnesses"] = witness_list(r.witnesses);
  j["seed"] = r.seed;
  if (timing) j["elapsed_ms"] = r.elapsed_ms;
  j["oracle"] = r.oracle;
  j["literal"] = r.literal;
  j["mode"] = pred::to_string(r.mode);
  j["budget"] = r.budget;
  j["max_chain"] = r.max_chain;
  j["unknowns"] = witness_list(r.unknowns);
  if (!r.orbits.empty()) {
    Json a = Json::array();
    for (const auto& o : r.orbits) {
      Json e;
      e["label"] = o.label;
      e["tuple"] = o.tuple;
      e["defined"] = to_string(o.defined);
      e["oracle"] = o.oracle;
      a.push_back(e);
    }
    j["orbits"] = a;
  }
  if (r.cross_check) {
    j["cross_check"] = to_json(*r.cross_check);
    j["cross_check_witnesses"] = witness_list(r.cross_check_witnesses);
  }
  if (timing) j["workers"] = r.workers;
  return j;
}

VerificationReport report_from_json(const Json& j) {
  VerificationReport r;
  try {
    r.space = parse_space_label(j.at("space").get<std::string>());
    r.predicate = j.at("predicate").get<std::string>();
    r.scope = j.at("scope").get<std::string>();
    r.counts = counts_from_json(j.at("counts"));
    r.witnesses = witnesses_from(j, "witnesses");
    r.seed = j.at("seed").get<std::uint64_t>();
    r.elapsed_ms = j.value("elapsed_ms", 0.0);
    r.oracle = j.value("oracle", std::string());
    r.literal = j.value("literal", false);
    r.mode = pred::parse_mode(j.value("mode", std::string("blind")));
    r.budget = j.value("budget", std::uint64_t{0});
    r.max_chain = j.value("max_chain", 0u);
    r.unknowns = witnesses_from(j, "unknowns");
    if (j.contains("orbits"))
      for (const auto& o : j.at("orbits"))
        r.orbits.push_back({o.at("label").get<std::string>(), o.at("tuple").get<std::vector<LineId>>(),
                            parse_tri(o.at("defined").get<std::string>()), o.at("oracle").get<bool>()});
    if (j.contains("cross_check")) r.cross_check = counts_from_json(j.at("cross_check"));
    r.cross_check_witnesses = witnesses_from(j, "cross_check_witnesses");
    r.workers = j.value("workers", 1u);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("malformed report: ") + e.what());
  }
  return r;
}

std::string to_text(const VerificationReport& r) {
  std::ostringstream o;
  o << r.predicate << " vs " << r.oracle << " on " << r.space.label() << " [" << r.scope << ", "
    << pred::to_string(r.mode) << ", seed " << r.seed << "]";
  if (r.literal) o << " (printed form)";
  o << "\n";
  const auto& c = r.counts;
  o << "  tuples " << c.total << "  agree " << c.agree << "  disagree " << c.disagree << "  unknown " << c.unknown
    << "  (defined true " << c.defined_true << ", oracle true " << c.oracle_true << ")\n";
  if (c.unknown) o << "  unknowns where the oracle says true: " << c.unknown_oracle_true << "\n";
  if (!r.orbits.empty()) o << "  orbit representatives: " << r.orbits.size() << "\n";
  if (r.cross_check)
    o << "  cross-check: tuples " << r.cross_check->total << "  agree " << r.cross_check->agree << "  disagree "
      << r.cross_check->disagree << "  unknown " << r.cross_check->unknown << "\n";
  if (r.max_chain) o << "  longest chain used: " << r.max_chain << "\n";
  for (const auto& w : r.witnesses)
    o << "  mismatch " << tuple_text(w.tuple) << ": defined " << to_string(w.defined) << ", oracle "
      << (w.oracle ? "true" : "false") << (w.transcript.empty() ? "" : "  [" + w.transcript + "]") << "\n";
  for (const auto& w : r.cross_check_witnesses)
    o << "  cross-check mismatch " << tuple_text(w.tuple) << ": defined " << to_string(w.defined) << ", oracle "
      << (w.oracle ? "true" : "false") << "\n";
  o << "  " << r.elapsed_ms << " ms\n";
  return o.str();
}

}  // namespace lig::verify
