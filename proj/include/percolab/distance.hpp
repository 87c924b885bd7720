#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "percolab/graph.hpp"

namespace percolab {

// Sentinel for "no path"; kept out of any numeric output file (the CSV
// writer emits an empty field instead).
inline constexpr std::int64_t kUnreachable = -1;

// Hop counts from source to every node by breadth-first search.
std::vector<std::int64_t> bfs_all(const Graph& g, NodeId source);

// Hop counts from source to the given targets (aligned with `targets`).
// Stops as soon as all targets are settled.
std::vector<std::int64_t> graph_distance(const Graph& g, NodeId source,
                                         std::span<const NodeId> targets);

}  // namespace percolab
