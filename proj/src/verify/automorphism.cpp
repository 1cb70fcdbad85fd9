#include "lig/verify/automorphism.hpp"

#include <algorithm>
#include <map>

namespace lig::verify {

namespace {

using Adj = std::vector<std::uint64_t>;  // one word per vertex

class Search {
 public:
  explicit Search(Adj adj) : adj_(std::move(adj)), n_(adj_.size()) {}

  // Colours of two copies of the graph (ids 0..n-1 and n..2n-1); the i-th
  // vertex of each sequence gets the private colour i+1 before refining.
  std::vector<int> refine(const std::vector<LineId>& s1, const std::vector<LineId>& s2) {
    std::vector<int> c(2 * n_, 0);
    for (std::size_t i = 0; i < s1.size(); ++i) c[s1[i]] = static_cast<int>(i) + 1;
    for (std::size_t i = 0; i < s2.size(); ++i) c[n_ + s2[i]] = static_cast<int>(i) + 1;
    std::size_t classes = 0;
    std::vector<std::pair<int, std::vector<int>>> sig(2 * n_);
    for (;;) {
      ++nodes_;
      for (std::size_t v = 0; v < 2 * n_; ++v) {
        const std::size_t base = v < n_ ? 0 : n_;
        auto& [own, nb] = sig[v];
        own = c[v];
        nb.clear();
        std::uint64_t bits = adj_[v - base];
        while (bits) {
          nb.push_back(c[base + static_cast<std::size_t>(__builtin_ctzll(bits))]);
          bits &= bits - 1;
        }
        std::sort(nb.begin(), nb.end());
      }
      std::map<std::pair<int, std::vector<int>>, int> ids;
      for (const auto& s : sig) ids.emplace(s, 0);
      int next = 0;
      for (auto& [k, id] : ids) id = next++;
      for (std::size_t v = 0; v < 2 * n_; ++v) c[v] = ids[sig[v]];
      if (ids.size() == classes) break;
      classes = ids.size();
    }
    return c;
  }

  // Is there an automorphism sending s1[i] to s2[i] for all i?
  bool extends(std::vector<LineId>& s1, std::vector<LineId>& s2) {
    const std::vector<int> c = refine(s1, s2);
    const int k = 1 + *std::max_element(c.begin(), c.end());
    std::vector<int> h1(k, 0), h2(k, 0);
    for (std::size_t v = 0; v < n_; ++v) ++h1[c[v]], ++h2[c[n_ + v]];
    if (h1 != h2) return false;
    int cell = -1;
    for (int col = 0; col < k; ++col)
      if (h1[col] > 1 && (cell < 0 || h1[col] < h1[cell])) cell = col;
    if (cell < 0) {
      std::vector<LineId> image(n_);
      for (std::size_t v = 0; v < n_; ++v)
        for (std::size_t w = 0; w < n_; ++w)
          if (c[n_ + w] == c[v]) image[v] = static_cast<LineId>(w);
      return is_automorphism(image);
    }
    LineId v = 0;
    while (c[v] != cell) ++v;
    for (LineId w = 0; w < n_; ++w) {
      if (c[n_ + w] != cell) continue;
      s1.push_back(v);
      s2.push_back(w);
      const bool ok = extends(s1, s2);
      s1.pop_back();
      s2.pop_back();
      if (ok) return true;
    }
    return false;
  }

  bool is_automorphism(const std::vector<LineId>& p) const {
    for (std::size_t v = 0; v < n_; ++v) {
      std::uint64_t img = 0, bits = adj_[v];
      while (bits) {
        img |= std::uint64_t{1} << p[static_cast<std::size_t>(__builtin_ctzll(bits))];
        bits &= bits - 1;
      }
      if (img != adj_[p[v]]) return false;
    }
    return true;
  }

  std::size_t n() const { return n_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  Adj adj_;
  std::size_t n_;
  std::uint64_t nodes_ = 0;
};

// little-endian base 10^9
void mul(std::vector<std::uint32_t>& big, std::uint64_t f) {
  std::uint64_t carry = 0;
  for (auto& d : big) {
    const std::uint64_t x = d * f + carry;
    d = static_cast<std::uint32_t>(x % 1'000'000'000);
    carry = x / 1'000'000'000;
  }
  while (carry) {
    big.push_back(static_cast<std::uint32_t>(carry % 1'000'000'000));
    carry /= 1'000'000'000;
  }
}

std::string decimal(const std::vector<std::uint32_t>& big) {
  std::string s = std::to_string(big.back());
  for (std::size_t i = big.size() - 1; i-- > 0;) {
    std::string part = std::to_string(big[i]);
    s += std::string(9 - part.size(), '0') + part;
  }
  return s;
}

}  // namespace

std::uint64_t AutomorphismResult::order_u64() const {
  std::uint64_t r = 1;
  for (auto o : orbit_sizes)
    if (__builtin_mul_overflow(r, o, &r)) return UINT64_MAX;
  return r;
}

AutomorphismResult automorphism_count(const IntersectionModel& m, std::size_t cap) {
  const std::size_t n = m.line_count();
  if (n > cap || n > 64)
    throw Error(ErrorCode::ModelTooLarge,
                "automorphism search is capped at " + std::to_string(std::min<std::size_t>(cap, 64)) + " lines, model has " +
                    std::to_string(n));
  Adj adj(n, 0);
  for (LineId v = 0; v < n; ++v) adj[v] = n ? m.row(v)[0] : 0;
  Search s(std::move(adj));
  AutomorphismResult r;
  std::vector<std::uint32_t> big{1};
  for (;;) {
    const std::vector<int> c = s.refine(r.base, r.base);
    const int k = 1 + (n ? *std::max_element(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(n)) : 0);
    std::vector<int> h(k, 0);
    for (std::size_t v = 0; v < n; ++v) ++h[c[v]];
    int cell = -1;
    for (int col = 0; col < k; ++col)
      if (h[col] > 1 && (cell < 0 || h[col] < h[cell])) cell = col;
    if (cell < 0) break;
    LineId v = 0;
    while (c[v] != cell) ++v;
    std::uint64_t orbit = 0;
    for (LineId w = 0; w < n; ++w) {
      if (c[w] != cell) continue;
      if (w == v) {
        ++orbit;
        continue;
      }
      std::vector<LineId> s1 = r.base, s2 = r.base;
      s1.push_back(v);
      s2.push_back(w);
      if (s.extends(s1, s2)) ++orbit;
    }
    r.orbit_sizes.push_back(orbit);
    mul(big, orbit);
    r.base.push_back(v);
  }
  r.order = decimal(big);
  r.nodes = s.nodes();
  return r;
}

IntersectionModel graph_model(std::size_t vertices, const std::vector<std::pair<LineId, LineId>>& edges) {
  const std::size_t w = words_for(vertices);
  std::vector<Word> rows(vertices * w, 0);
  for (auto [a, b] : edges) {
    if (a >= vertices || b >= vertices) throw Error(ErrorCode::InvalidId, "edge endpoint out of range");
    rows[a * w + (b >> 6)] |= Word{1} << (b & 63);
    rows[b * w + (a >> 6)] |= Word{1} << (a & 63);
  }
  return IntersectionModel(SpaceParams{}, vertices, std::move(rows));
}

}  // namespace lig::verify
