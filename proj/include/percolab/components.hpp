#pragma once

#include <cstdint>
#include <vector>

#include "percolab/graph.hpp"

namespace percolab {

// Partition of the node set into connected components.  Component ids are
// assigned in order of first appearance while scanning nodes 0..n-1, so they
// are deterministic for a given graph.
struct ComponentLabeling {
  std::vector<std::uint32_t> label;   // per-node component id
  std::vector<std::uint32_t> sizes;   // per-component node count
  std::uint32_t largest = 0;          // id of a maximum-size component (smallest id on ties)

  std::size_t count() const { return sizes.size(); }
  std::uint32_t largest_size() const { return sizes.empty() ? 0 : sizes[largest]; }
};

ComponentLabeling components(const Graph& g);

}  // namespace percolab
