#include "percolab/clustering.hpp"

#include <algorithm>
#include <vector>

namespace percolab {

double clustering_coefficient(const Graph& g) {
  // Work on deduplicated, loop-free neighbour lists.
  std::vector<std::vector<NodeId>> nbr(g.num_nodes);
  for (NodeId u = 0; u < g.num_nodes; ++u) {
    auto& a = nbr[u];
    a.assign(g.adjacency[u].begin(), g.adjacency[u].end());
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
    a.erase(std::remove(a.begin(), a.end(), u), a.end());
  }

  double triples = 0;
  for (NodeId u = 0; u < g.num_nodes; ++u) {
    const double k = double(nbr[u].size());
    triples += k * (k - 1) / 2;
  }
  if (triples == 0) return 0.0;

  // sum over edges of |N(u) ∩ N(v)| equals 3 * triangles
  double closed = 0;
  for (NodeId u = 0; u < g.num_nodes; ++u) {
    for (NodeId v : nbr[u]) {
      if (v <= u) continue;
      const auto& a = nbr[u];
      const auto& b = nbr[v];
      std::size_t i = 0, j = 0;
      while (i < a.size() && j < b.size()) {
        if (a[i] < b[j]) ++i;
        else if (a[i] > b[j]) ++j;
        else { ++closed; ++i; ++j; }
      }
    }
  }
  return closed / triples;
}

}  // namespace percolab
