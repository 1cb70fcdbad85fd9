#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lig/model/intersection_model.hpp"

namespace lig::pred {

struct CliqueResult {
  bool found = false;
  bool complete = true;  // false if the node budget ran out
  std::vector<LineId> clique;
  std::uint64_t nodes = 0;
};

/// Branch and bound with a greedy colouring bound. Stops at the first
/// clique of size k.
CliqueResult clique_at_least(const IntersectionModel& m, std::size_t k, std::uint64_t max_nodes = UINT64_MAX);

/// Exact maximum clique of the ~ graph.
CliqueResult max_clique(const IntersectionModel& m, std::uint64_t max_nodes = UINT64_MAX);

}  // namespace lig::pred
