#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lig/model/intersection_model.hpp"

namespace lig::verify {

inline constexpr std::size_t kAutomorphismCap = 64;

struct AutomorphismResult {
  /// Group order in decimal; exact, no overflow.
  std::string order;
  /// Orbit lengths along the stabilizer chain; their product is the order.
  std::vector<std::uint64_t> orbit_sizes;
  std::vector<LineId> base;
  std::uint64_t nodes = 0;

  /// The order if it fits, else UINT64_MAX.
  std::uint64_t order_u64() const;
};

/// Order of the group of permutations of the lines preserving ~, by
/// individualization and colour refinement along a stabilizer chain.
/// Throws ModelTooLarge above `cap` lines.
AutomorphismResult automorphism_count(const IntersectionModel& m, std::size_t cap = kAutomorphismCap);

/// A model over an arbitrary graph (tests, stand-ins).
IntersectionModel graph_model(std::size_t vertices, const std::vector<std::pair<LineId, LineId>>& edges);

}  // namespace lig::verify
