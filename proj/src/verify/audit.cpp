#include "lig/verify/audit.hpp"

#include <sstream>

namespace lig::verify {

PurityReport audit_sweep(const PredicateSpec& spec, SpaceBundle& b, const TupleSet& tuples, std::uint64_t max_nodes) {
  require_guard(spec, b.params());
  PurityReport r;
  r.predicate = spec.name;
  r.space = b.params().label();
  r.tuples = tuples.size();
  pred::EvalBudget budget;
  budget.max_nodes = max_nodes;
  budget.mode = pred::Mode::Blind;
  pred::Evaluator ev(b.table, budget, nullptr);
  const std::uint64_t before = b.space.coordinate_reads();
  {
    AuditScope scope(b.model);
    for (std::size_t i = 0; i < tuples.size(); ++i) spec.defined(ev, tuples.at(i));
    const auto& a = b.model.audit();
    r.sim_reads = a.sim_reads.load();
    r.row_reads = a.row_reads.load();
    r.eq_tests = a.eq_tests.load();
  }
  r.coordinate_reads = b.space.coordinate_reads() - before;
  return r;
}

Json to_json(const PurityReport& r) {
  Json j;
  j["predicate"] = r.predicate;
  j["space"] = r.space;
  j["scope"] = r.scope;
  j["tuples"] = r.tuples;
  j["sim_reads"] = r.sim_reads;
  j["row_reads"] = r.row_reads;
  j["eq_tests"] = r.eq_tests;
  j["coordinate_reads"] = r.coordinate_reads;
  j["clean"] = r.clean();
  return j;
}

std::string to_text(const PurityReport& r) {
  std::ostringstream o;
  o << r.predicate << " on " << r.space << " [" << r.scope << "]: " << r.tuples << " tuples, sim " << r.sim_reads
    << ", rows " << r.row_reads << ", eq " << r.eq_tests << ", coordinates " << r.coordinate_reads
    << (r.clean() ? "  clean" : "  NOT CLEAN");
  return o.str();
}

}  // namespace lig::verify
