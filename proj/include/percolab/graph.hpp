#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace percolab {

using NodeId = std::uint32_t;

// Undirected multigraph as symmetric adjacency lists.  A self-loop at x
// stores x twice in adj(x), so the handshake identity sum(deg) = 2|E| holds
// for every edge kind.  Positions (R^d coordinates) and per-node weights are
// optional side arrays filled by the generators that have them.
struct Graph {
  std::size_t num_nodes = 0;
  std::vector<std::vector<NodeId>> adjacency;
  int dim = 0;                    // 0 means "no positions"
  std::vector<double> positions;  // num_nodes * dim, row-major
  std::vector<double> weights;    // empty or num_nodes

  explicit Graph(std::size_t n = 0) : num_nodes(n), adjacency(n) {}

  void add_edge(NodeId u, NodeId v) {
    adjacency[u].push_back(v);
    adjacency[v].push_back(u);
  }

  std::size_t degree(NodeId v) const { return adjacency[v].size(); }

  std::size_t num_edges() const {
    std::size_t total = 0;
    for (const auto& a : adjacency) total += a.size();
    return total / 2;
  }

  bool has_positions() const { return dim > 0; }
  bool has_weights() const { return !weights.empty(); }

  const double* position(NodeId v) const { return positions.data() + std::size_t(v) * dim; }
};

struct SimplifyReport {
  std::size_t self_loops = 0;       // loops removed
  std::size_t parallel_edges = 0;   // surplus multi-edges removed
};

// Collapses self-loops and parallel edges in place; adjacency lists come out
// sorted.  Returns how much was removed.
SimplifyReport simplify(Graph& g);

// Checks the structural invariants (symmetry, id range, position/weight
// shapes).  Used by tests and by the edge-list reader.
bool well_formed(const Graph& g, std::string* why = nullptr);

// Edge-list text format (see docs/formats.md):
//   # nodes=<n> d=<d>
//   <u> <v>         one line per edge, u <= v, lexicographically sorted
//   # pos           optional, then one line of d coordinates per node
//   # weight        optional, then one weight per node
void write_edge_list(const Graph& g, std::ostream& os);
void write_edge_list_file(const Graph& g, const std::string& path);
Graph read_edge_list(std::istream& is);
Graph read_edge_list_file(const std::string& path);

}  // namespace percolab
