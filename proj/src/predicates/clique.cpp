#include "lig/predicates/clique.hpp"

#include <algorithm>

namespace lig::pred {

namespace {

class Search {
 public:
  Search(const IntersectionModel& m, std::size_t target, std::uint64_t max_nodes)
      : m_(m), target_(target), max_nodes_(max_nodes) {}

  CliqueResult run() {
    LineSet cand = m_.universe();
    expand(cand);
    CliqueResult r;
    r.nodes = nodes_;
    r.complete = !out_of_budget_;
    r.clique = best_;
    r.found = best_.size() >= target_ && target_ > 0;
    return r;
  }

 private:
  // Greedy colouring of `p` in id order; returns vertices with their colour
  // bound, ascending by colour.
  void colour(const LineSet& p, std::vector<LineId>& order, std::vector<std::size_t>& bound) const {
    order.clear();
    bound.clear();
    LineSet uncoloured = p;
    std::size_t c = 0;
    while (!uncoloured.empty()) {
      ++c;
      LineSet q = uncoloured;
      while (!q.empty()) {
        const LineId v = q.first();
        q.reset(v);
        q -= LineSet(m_.line_count(), m_.row(v));
        uncoloured.reset(v);
        order.push_back(v);
        bound.push_back(c);
      }
    }
  }

  bool done() const { return out_of_budget_ || (target_ > 0 && best_.size() >= target_); }

  void expand(LineSet p) {
    std::vector<LineId> order;
    std::vector<std::size_t> bound;
    colour(p, order, bound);
    for (std::size_t i = order.size(); i-- > 0;) {
      if (done()) return;
      if (++nodes_ > max_nodes_) {
        out_of_budget_ = true;
        return;
      }
      if (cur_.size() + bound[i] <= best_.size()) return;
      const LineId v = order[i];
      cur_.push_back(v);
      if (cur_.size() > best_.size()) best_ = cur_;
      LineSet np = p;
      np.and_words(m_.row(v));
      if (!np.empty()) expand(np);
      cur_.pop_back();
      p.reset(v);
    }
  }

  const IntersectionModel& m_;
  std::size_t target_;
  std::uint64_t max_nodes_;
  std::uint64_t nodes_ = 0;
  bool out_of_budget_ = false;
  std::vector<LineId> cur_, best_;
};

}  // namespace

CliqueResult clique_at_least(const IntersectionModel& m, std::size_t k, std::uint64_t max_nodes) {
  if (k == 0) return {true, true, {}, 0};
  CliqueResult r = Search(m, k, max_nodes).run();
  if (r.found) r.clique.resize(k);
  std::sort(r.clique.begin(), r.clique.end());
  return r;
}

CliqueResult max_clique(const IntersectionModel& m, std::uint64_t max_nodes) {
  CliqueResult r = Search(m, 0, max_nodes).run();
  r.found = !r.clique.empty();
  std::sort(r.clique.begin(), r.clique.end());
  return r;
}

}  // namespace lig::pred
