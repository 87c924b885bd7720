#include "percolab/renorm.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "percolab/union_find.hpp"

namespace percolab {

namespace {

// integer coordinates of node v (positions are lattice points stored as doubles)
void node_coords(const Graph& g, NodeId v, std::vector<std::int64_t>& out) {
  const double* p = g.position(v);
  for (int k = 0; k < g.dim; ++k) out[std::size_t(k)] = std::int64_t(std::llround(p[k]));
}

bool inside(const std::vector<std::int64_t>& c, const std::vector<std::int64_t>& lo,
            std::int64_t extent) {
  for (std::size_t k = 0; k < c.size(); ++k)
    if (c[k] < lo[k] || c[k] >= lo[k] + extent) return false;
  return true;
}

struct InducedComponents {
  std::vector<NodeId> nodes;                       // nodes inside the window
  std::unordered_map<NodeId, std::uint32_t> root;  // node -> component root id
};

// connected components of the subgraph induced on [lo, lo+extent)^d
InducedComponents induced_components(const Graph& g, const std::vector<std::int64_t>& lo,
                                     std::int64_t extent) {
  InducedComponents out;
  std::vector<std::int64_t> c(std::size_t(g.dim));
  std::unordered_map<NodeId, std::uint32_t> local;
  for (NodeId v = 0; v < g.num_nodes; ++v) {
    node_coords(g, v, c);
    if (inside(c, lo, extent)) {
      local.emplace(v, std::uint32_t(out.nodes.size()));
      out.nodes.push_back(v);
    }
  }
  UnionFind uf(out.nodes.size());
  for (std::uint32_t li = 0; li < out.nodes.size(); ++li) {
    for (NodeId w : g.adjacency[out.nodes[li]]) {
      auto it = local.find(w);
      if (it != local.end() && it->second > li) uf.unite(li, it->second);
    }
  }
  for (std::uint32_t li = 0; li < out.nodes.size(); ++li)
    out.root.emplace(out.nodes[li], uf.find(li));
  return out;
}

}  // namespace

std::vector<SemiCluster> find_semi_clusters(const Graph& g, const std::vector<std::int64_t>& origin,
                                            std::int64_t M, std::int64_t K, double ell) {
  if (!g.has_positions()) throw std::invalid_argument("find_semi_clusters: graph needs positions");
  if (std::size_t(g.dim) != origin.size())
    throw std::invalid_argument("find_semi_clusters: origin dimension mismatch");
  if (ell < 1) throw std::invalid_argument("find_semi_clusters: ell must be >= 1");

  std::vector<std::int64_t> enlarged_lo(origin);
  for (auto& x : enlarged_lo) x -= K;
  const InducedComponents comps = induced_components(g, enlarged_lo, M + 2 * K);

  // members of B_v per component root
  std::unordered_map<std::uint32_t, std::vector<NodeId>> in_box;
  std::vector<std::int64_t> c(std::size_t(g.dim));
  for (NodeId v : comps.nodes) {
    node_coords(g, v, c);
    if (inside(c, origin, M)) in_box[comps.root.at(v)].push_back(v);
  }

  std::vector<SemiCluster> clusters;
  for (auto& [root, members] : in_box) {
    if (double(members.size()) + 1e-9 >= ell) {
      std::sort(members.begin(), members.end());
      clusters.push_back(SemiCluster{std::move(members)});
    }
  }
  std::sort(clusters.begin(), clusters.end(),
            [](const SemiCluster& a, const SemiCluster& b) { return a.sites[0] < b.sites[0]; });
  return clusters;
}

RenormCertificate renorm_goodness(const Graph& g, const RenormSchedule& schedule, int stage,
                                  const std::vector<std::int64_t>& origin) {
  schedule.validate();
  if (stage > schedule.n_max) throw std::invalid_argument("renorm_goodness: stage > n_max");
  if (!g.has_positions()) throw std::invalid_argument("renorm_goodness: graph needs positions");

  RenormCertificate cert;
  cert.stage = stage;
  cert.origin = origin;
  const int d = g.dim;

  if (stage == 0) {
    const double ell = schedule.kappa0 * std::pow(double(schedule.M), d);
    const auto clusters = find_semi_clusters(g, origin, schedule.M, schedule.K, std::max(1.0, ell));
    cert.semi_clusters = clusters.size();
    cert.good = clusters.size() == 1;
    return cert;
  }

  const std::int64_t side_prev = schedule.box_side(stage - 1);
  const std::int64_t a_n = schedule.a(stage);
  std::uint64_t subboxes = 1;
  for (int k = 0; k < d; ++k) subboxes *= std::uint64_t(a_n);
  cert.required_subboxes = schedule.kappa(stage) * std::pow(double(a_n), d);

  // recurse over the a_n^d sub-boxes
  std::vector<std::vector<std::int64_t>> good_origins;
  for (std::uint64_t t = 0; t < subboxes; ++t) {
    std::vector<std::int64_t> sub(origin);
    std::uint64_t rest = t;
    for (int k = d - 1; k >= 0; --k) {
      sub[std::size_t(k)] += std::int64_t(rest % std::uint64_t(a_n)) * side_prev;
      rest /= std::uint64_t(a_n);
    }
    RenormCertificate child = renorm_goodness(g, schedule, stage - 1, sub);
    if (child.good) {
      ++cert.good_subboxes;
      good_origins.push_back(sub);
    }
    cert.children.push_back(std::move(child));
  }
  const bool enough = double(cert.good_subboxes) + 1e-9 >= cert.required_subboxes;

  // (b) all large semi-clusters of good sub-boxes connect within B_{n,v}^(K)
  const double ell_prev = std::pow(double(side_prev), d) * schedule.density_u(stage - 1);
  std::vector<NodeId> representatives;
  for (const auto& sub : good_origins) {
    const auto clusters =
        find_semi_clusters(g, sub, side_prev, schedule.K, std::max(1.0, ell_prev));
    for (const auto& cl : clusters) representatives.push_back(cl.sites[0]);
    cert.clusters_checked += clusters.size();
  }
  cert.clusters_connected = true;
  if (representatives.size() > 1) {
    std::vector<std::int64_t> lo(origin);
    for (auto& x : lo) x -= schedule.K;
    const std::int64_t side_n = schedule.box_side(stage);
    const InducedComponents comps = induced_components(g, lo, side_n + 2 * schedule.K);
    const std::uint32_t first = comps.root.at(representatives[0]);
    for (NodeId rep : representatives)
      if (comps.root.at(rep) != first) {
        cert.clusters_connected = false;
        break;
      }
  }
  cert.good = enough && cert.clusters_connected;
  return cert;
}

}  // namespace percolab
