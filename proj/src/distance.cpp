#include "percolab/distance.hpp"

#include <vector>

namespace percolab {

std::vector<std::int64_t> bfs_all(const Graph& g, NodeId source) {
  std::vector<std::int64_t> dist(g.num_nodes, kUnreachable);
  if (source >= g.num_nodes) return dist;
  std::vector<NodeId> frontier{source}, next;
  dist[source] = 0;
  std::int64_t hops = 0;
  while (!frontier.empty()) {
    ++hops;
    next.clear();
    for (NodeId u : frontier) {
      for (NodeId v : g.adjacency[u]) {
        if (dist[v] == kUnreachable) {
          dist[v] = hops;
          next.push_back(v);
        }
      }
    }
    frontier.swap(next);
  }
  return dist;
}

std::vector<std::int64_t> graph_distance(const Graph& g, NodeId source,
                                         std::span<const NodeId> targets) {
  std::vector<std::int64_t> dist(g.num_nodes, kUnreachable);
  std::vector<std::uint8_t> wanted(g.num_nodes, 0);
  std::size_t remaining = 0;
  for (NodeId t : targets)
    if (!wanted[t]) {
      wanted[t] = 1;
      ++remaining;
    }
  dist[source] = 0;
  if (wanted[source]) --remaining;
  std::vector<NodeId> frontier{source}, next;
  std::int64_t hops = 0;
  while (!frontier.empty() && remaining > 0) {
    ++hops;
    next.clear();
    for (NodeId u : frontier) {
      for (NodeId v : g.adjacency[u]) {
        if (dist[v] == kUnreachable) {
          dist[v] = hops;
          if (wanted[v]) --remaining;
          next.push_back(v);
        }
      }
    }
    frontier.swap(next);
  }
  std::vector<std::int64_t> out;
  out.reserve(targets.size());
  for (NodeId t : targets) out.push_back(dist[t]);
  return out;
}

}  // namespace percolab
