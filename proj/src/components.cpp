#include "percolab/components.hpp"

#include "percolab/union_find.hpp"

namespace percolab {

ComponentLabeling components(const Graph& g) {
  UnionFind uf(g.num_nodes);
  for (NodeId u = 0; u < g.num_nodes; ++u)
    for (NodeId v : g.adjacency[u])
      if (v > u) uf.unite(u, v);

  ComponentLabeling out;
  out.label.assign(g.num_nodes, 0);
  std::vector<std::uint32_t> root_to_id(g.num_nodes, UINT32_MAX);
  for (NodeId v = 0; v < g.num_nodes; ++v) {
    const std::uint32_t root = uf.find(v);
    if (root_to_id[root] == UINT32_MAX) {
      root_to_id[root] = std::uint32_t(out.sizes.size());
      out.sizes.push_back(0);
    }
    out.label[v] = root_to_id[root];
    ++out.sizes[out.label[v]];
  }
  out.largest = 0;
  for (std::uint32_t id = 1; id < out.sizes.size(); ++id)
    if (out.sizes[id] > out.sizes[out.largest]) out.largest = id;
  return out;
}

}  // namespace percolab
