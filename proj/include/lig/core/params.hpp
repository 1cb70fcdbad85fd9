#pragma once

#include <cstdint>
#include <string>

#include "lig/core/types.hpp"

namespace lig {

/// Dimension data shared by spaces and intersection models.
struct SpaceParams {
  SpaceKind kind = SpaceKind::Projective;
  unsigned n = 3;
  unsigned q = 2;
  unsigned m = 1;          // projective floor((n-1)/2), affine floor((n+1)/2)
  unsigned r = 0;          // 2^{m+1} - 4
  std::uint64_t k = 0;     // 2^{n-1} (2^n - 1)

  static SpaceParams make(SpaceKind kind, unsigned n, unsigned q) {
    SpaceParams p;
    p.kind = kind;
    p.n = n;
    p.q = q;
    p.m = kind == SpaceKind::Projective ? (n - 1) / 2 : (n + 1) / 2;
    p.r = (1u << (p.m + 1)) - 4;
    p.k = (std::uint64_t{1} << (n - 1)) * ((std::uint64_t{1} << n) - 1);
    return p;
  }

  bool projective() const { return kind == SpaceKind::Projective; }
  bool affine() const { return kind == SpaceKind::Affine; }

  /// "pg:3:2" / "ag:4:3"
  std::string label() const {
    return std::string(projective() ? "pg:" : "ag:") + std::to_string(n) + ":" + std::to_string(q);
  }

  bool operator==(const SpaceParams&) const = default;
};

/// Parse "pg:<n>:<q>" or "ag:<n>:<q>". Throws Error(Usage) on bad syntax.
SpaceParams parse_space_label(const std::string& text);

}  // namespace lig
