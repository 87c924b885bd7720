#include "percolab/generators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace percolab {

double hom_edge_probability(const HomLrpParams& params, std::int64_t r2) {
  if (r2 == 1) return params.p;
  return -std::expm1(-params.lambda * std::pow(double(r2), -params.alpha / 2));
}

namespace {

template <class RowFn>
void row_scan(std::size_t n, Exec exec, RowFn&& fn) {
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 16)
    for (std::int64_t i = 0; i < std::int64_t(n); ++i) fn(std::size_t(i));
  } else {
    for (std::size_t i = 0; i < n; ++i) fn(i);
  }
}

// rows[i] holds the upper-triangle neighbours j > i, each edge exactly once.
Graph assemble(std::size_t n, const std::vector<std::vector<NodeId>>& rows) {
  Graph g(n);
  std::vector<std::uint32_t> deg(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    deg[i] += std::uint32_t(rows[i].size());
    for (NodeId j : rows[i]) ++deg[j];
  }
  for (std::size_t i = 0; i < n; ++i) g.adjacency[i].reserve(deg[i]);
  for (std::size_t i = 0; i < n; ++i)
    for (NodeId j : rows[i]) g.add_edge(NodeId(i), j);
  return g;
}

void attach_lattice_positions(Graph& g, const LatticeBox& box) {
  g.dim = box.d;
  g.positions.resize(g.num_nodes * std::size_t(box.d));
  std::vector<std::int64_t> c(box.d);
  for (std::size_t v = 0; v < g.num_nodes; ++v) {
    box.coords_of(v, c.data());
    for (int k = 0; k < box.d; ++k) g.positions[v * std::size_t(box.d) + k] = double(c[k]);
  }
}

std::vector<std::int64_t> lattice_coords(const LatticeBox& box) {
  const std::size_t n = box.num_sites();
  std::vector<std::int64_t> coords(n * std::size_t(box.d));
  for (std::size_t v = 0; v < n; ++v) box.coords_of(v, coords.data() + v * std::size_t(box.d));
  return coords;
}

// Geometric skip: failures before the next success of a Bernoulli(p) sweep.
std::uint64_t geometric_skip(double u, double log1mp) {
  // u in [0,1); log1mp = log(1-p) < 0
  const double f = std::floor(std::log1p(-u) / log1mp);
  if (f >= 9.0e18) return std::uint64_t(9.0e18);
  return std::uint64_t(f);
}

// p_xy per squared distance; exhaustive loops index this instead of calling
// pow per pair.
std::vector<double> hom_probability_table(const LatticeBox& box, const HomLrpParams& params,
                                          Exec exec) {
  const std::int64_t max_r2 = box.d * (box.side - 1) * (box.side - 1);
  std::vector<double> table(std::size_t(max_r2) + 1, 0.0);
  const bool par = exec == Exec::parallel;
#pragma omp parallel for schedule(static) if (par)
  for (std::int64_t r2 = 1; r2 <= max_r2; ++r2)
    table[std::size_t(r2)] = hom_edge_probability(params, r2);
  return table;
}

// lambda * r^-alpha per squared distance (weights multiply in later).
std::vector<double> rate_table(const LatticeBox& box, double lambda, double alpha, Exec exec) {
  const std::int64_t max_r2 = box.d * (box.side - 1) * (box.side - 1);
  std::vector<double> table(std::size_t(max_r2) + 1, 0.0);
  const bool par = exec == Exec::parallel;
#pragma omp parallel for schedule(static) if (par)
  for (std::int64_t r2 = 1; r2 <= max_r2; ++r2)
    table[std::size_t(r2)] = lambda * std::pow(double(r2), -alpha / 2);
  return table;
}

}  // namespace

Graph gen_er(const ErParams& params, RngStream rng, Exec exec, bool fast) {
  params.validate();
  const std::size_t n = params.n;
  RngStream edges = rng.fork(rng_tag::edges);

  if (fast) {
    // Skip sampling (Batagelj-Brandes): same product-Bernoulli law, O(edges).
    Graph g(n);
    const double log1mp = std::log1p(-params.p);
    std::uint64_t v = 1, w = 0;
    bool first = true;
    for (;;) {
      std::uint64_t skip = geometric_skip(edges.next_uniform(), log1mp) + (first ? 0 : 1);
      first = false;
      w += skip;
      while (v < n && w >= v) {
        w -= v;
        ++v;
      }
      if (v >= n) break;
      g.add_edge(NodeId(v), NodeId(w));
    }
    return g;
  }

  std::vector<std::vector<NodeId>> rows(n);
  const double p = params.p;
  row_scan(n, exec, [&](std::size_t i) {
    const std::uint64_t base = std::uint64_t(i) * n;
    auto& row = rows[i];
    for (std::size_t j = i + 1; j < n; ++j)
      if (edges.uniform_at(base + j) < p) row.push_back(NodeId(j));
  });
  return assemble(n, rows);
}

DegreeLaw nsw_degree_law(const NswParams& params) {
  params.validate();
  DegreeLaw law;
  law.weights.assign(params.k_max + 1, 0.0);
  long double z = 0;
  for (std::uint64_t k = params.k_max; k >= 1; --k)  // small terms first
    z += std::pow((long double)k, -(long double)(params.tau + 1));
  for (std::uint64_t k = 1; k <= params.k_max; ++k)
    law.weights[k] = double(std::pow((long double)k, -(long double)(params.tau + 1)) / z);
  return law;
}

Graph molloy_reed(const std::vector<std::uint32_t>& degrees, RngStream rng) {
  const std::size_t n = degrees.size();
  if (n < 2) throw std::invalid_argument("molloy_reed: need at least 2 nodes");
  std::uint64_t total = 0;
  for (auto d : degrees) total += d;
  if (total == 0) throw std::invalid_argument("molloy_reed: all-zero degree sequence");

  RngStream match = rng.fork(rng_tag::matching);
  std::vector<NodeId> stubs;
  stubs.reserve(total + 1);
  for (std::size_t v = 0; v < n; ++v)
    stubs.insert(stubs.end(), degrees[v], NodeId(v));
  if (total % 2 == 1) stubs.push_back(NodeId(match.next_below(n)));

  // Fisher-Yates, then pair consecutive stubs: a uniform perfect matching.
  for (std::size_t i = stubs.size() - 1; i > 0; --i)
    std::swap(stubs[i], stubs[match.next_below(i + 1)]);

  Graph g(n);
  for (std::size_t t = 0; t + 1 < stubs.size(); t += 2) g.add_edge(stubs[t], stubs[t + 1]);
  return g;
}

Graph gen_nsw(const NswParams& params, RngStream rng) {
  const DegreeLaw law = nsw_degree_law(params);
  const DegreeSampler sampler(law);
  RngStream deg = rng.fork(rng_tag::degrees);
  std::vector<std::uint32_t> degrees(params.n);
  for (std::size_t v = 0; v < params.n; ++v) degrees[v] = sampler.sample(deg.uniform_at(v));
  return molloy_reed(degrees, rng);
}

Graph gen_nn_bond(const LatticeBox& box, const NnBondParams& params, RngStream rng, Exec exec) {
  box.validate();
  params.validate();
  const std::size_t n = box.num_sites();
  RngStream edges = rng.fork(rng_tag::edges);
  std::vector<std::vector<NodeId>> rows(n);
  const auto coords = lattice_coords(box);
  const int d = box.d;
  const double p = params.p;

  row_scan(n, exec, [&](std::size_t i) {
    const std::int64_t* c = coords.data() + i * std::size_t(d);
    std::vector<std::int64_t> nb(std::size_t(d), 0);
    auto& row = rows[i];
    for (int axis = 0; axis < d; ++axis) {
      for (int k = 0; k < d; ++k) nb[std::size_t(k)] = c[k];
      nb[std::size_t(axis)] = c[axis] + 1;
      NodeId j;
      if (nb[std::size_t(axis)] < box.side) {
        j = NodeId(box.index_of(nb.data()));
      } else if (box.boundary == Boundary::torus) {
        nb[std::size_t(axis)] = 0;
        j = NodeId(box.index_of(nb.data()));
      } else {
        continue;
      }
      const std::uint64_t bond = std::uint64_t(axis) * n + i;
      if (edges.uniform_at(bond) < p) row.push_back(j);
    }
    std::sort(row.begin(), row.end());
  });

  Graph g = assemble(n, rows);
  attach_lattice_positions(g, box);
  return g;
}

namespace {

// Displacement-class fast path for the homogeneous lattice model (free
// boundary): pairs in one class share p, so a geometric skip sweep over the
// class reproduces the product law in O(edges + classes).
Graph gen_hom_lrp_fast(const LatticeBox& box, const HomLrpParams& params, RngStream edges,
                       Exec exec) {
  const std::size_t n = box.num_sites();
  const int d = box.d;
  const std::int64_t N = box.side;

  // canonical displacements (first nonzero coordinate positive), flat d per entry
  std::vector<std::int64_t> class_deltas;
  {
    std::vector<std::int64_t> delta(std::size_t(d), 0);
    // iterate the full cube [-(N-1), N-1]^d and keep canonical ones
    const std::int64_t span = 2 * N - 1;
    std::uint64_t total = 1;
    for (int k = 0; k < d; ++k) total *= std::uint64_t(span);
    for (std::uint64_t t = 0; t < total; ++t) {
      std::uint64_t rest = t;
      for (int k = d - 1; k >= 0; --k) {
        delta[std::size_t(k)] = std::int64_t(rest % std::uint64_t(span)) - (N - 1);
        rest /= std::uint64_t(span);
      }
      int sign = 0;
      for (int k = 0; k < d; ++k) {
        if (delta[std::size_t(k)] != 0) {
          sign = delta[std::size_t(k)] > 0 ? 1 : -1;
          break;
        }
      }
      if (sign == 1) class_deltas.insert(class_deltas.end(), delta.begin(), delta.end());
    }
  }
  const std::size_t num_classes = class_deltas.size() / std::size_t(d);

  std::vector<std::pair<NodeId, NodeId>> all_edges;
#pragma omp parallel if (exec == Exec::parallel)
  {
    std::vector<std::pair<NodeId, NodeId>> local;
    std::vector<std::int64_t> base(std::size_t(d), 0), other(std::size_t(d), 0);
#pragma omp for schedule(dynamic, 256) nowait
    for (std::int64_t ci = 0; ci < std::int64_t(num_classes); ++ci) {
      const std::int64_t* delta = class_deltas.data() + std::size_t(ci) * std::size_t(d);
      std::int64_t r2 = 0;
      std::uint64_t count = 1;
      for (int k = 0; k < d; ++k) {
        r2 += delta[std::size_t(k)] * delta[std::size_t(k)];
        count *= std::uint64_t(N - std::abs(delta[std::size_t(k)]));
      }
      const double p = hom_edge_probability(params, r2);
      if (p <= 0.0 || count == 0) continue;
      RngStream cls = edges.fork(std::uint64_t(ci));
      if (p >= 1.0) {
        for (std::uint64_t t = 0; t < count; ++t) {
          std::uint64_t rest = t;
          for (int k = d - 1; k >= 0; --k) {
            const std::uint64_t range = std::uint64_t(N - std::abs(delta[std::size_t(k)]));
            base[std::size_t(k)] = std::int64_t(rest % range) +
                                   std::max<std::int64_t>(0, -delta[std::size_t(k)]);
            rest /= range;
          }
          for (int k = 0; k < d; ++k) other[std::size_t(k)] = base[std::size_t(k)] + delta[std::size_t(k)];
          local.emplace_back(NodeId(box.index_of(base.data())), NodeId(box.index_of(other.data())));
        }
        continue;
      }
      const double log1mp = std::log1p(-p);
      std::uint64_t t = geometric_skip(cls.next_uniform(), log1mp);
      while (t < count) {
        std::uint64_t rest = t;
        for (int k = d - 1; k >= 0; --k) {
          const std::uint64_t range = std::uint64_t(N - std::abs(delta[std::size_t(k)]));
          base[std::size_t(k)] = std::int64_t(rest % range) +
                                 std::max<std::int64_t>(0, -delta[std::size_t(k)]);
          rest /= range;
        }
        for (int k = 0; k < d; ++k) other[std::size_t(k)] = base[std::size_t(k)] + delta[std::size_t(k)];
        local.emplace_back(NodeId(box.index_of(base.data())), NodeId(box.index_of(other.data())));
        const std::uint64_t skip = geometric_skip(cls.next_uniform(), log1mp);
        if (count - t <= skip + 1) break;
        t += skip + 1;
      }
    }
#pragma omp critical
    all_edges.insert(all_edges.end(), local.begin(), local.end());
  }

  // canonical order so thread scheduling cannot leak into the output
  for (auto& e : all_edges)
    if (e.second < e.first) std::swap(e.first, e.second);
  std::sort(all_edges.begin(), all_edges.end());

  Graph g(n);
  std::vector<std::uint32_t> deg(n, 0);
  for (const auto& e : all_edges) {
    ++deg[e.first];
    ++deg[e.second];
  }
  for (std::size_t v = 0; v < n; ++v) g.adjacency[v].reserve(deg[v]);
  for (const auto& e : all_edges) g.add_edge(e.first, e.second);
  attach_lattice_positions(g, box);
  return g;
}

}  // namespace

Graph gen_hom_lrp(const LatticeBox& box, const HomLrpParams& params, RngStream rng, Exec exec,
                  bool fast) {
  box.validate();
  params.validate();
  RngStream edges = rng.fork(rng_tag::edges);
  if (fast) {
    if (box.boundary != Boundary::free)
      throw std::invalid_argument("gen_hom_lrp: fast path supports the free boundary only");
    return gen_hom_lrp_fast(box, params, edges, exec);
  }

  const std::size_t n = box.num_sites();
  const auto table = hom_probability_table(box, params, exec);
  const auto coords = lattice_coords(box);
  const int d = box.d;
  std::vector<std::vector<NodeId>> rows(n);

  row_scan(n, exec, [&](std::size_t i) {
    const std::int64_t* ci = coords.data() + i * std::size_t(d);
    auto& row = rows[i];
    for (std::size_t j = i + 1; j < n; ++j) {
      const std::int64_t r2 = box.dist2(ci, coords.data() + j * std::size_t(d));
      if (edges.uniform_at(std::uint64_t(i) * n + j) < table[std::size_t(r2)])
        row.push_back(NodeId(j));
    }
  });

  Graph g = assemble(n, rows);
  attach_lattice_positions(g, box);
  return g;
}

Graph gen_weighted_lrp(const LatticeBox& box, const std::vector<double>& weights, double lambda,
                       double alpha, RngStream rng, Exec exec) {
  box.validate();
  const std::size_t n = box.num_sites();
  if (weights.size() != n) throw std::invalid_argument("gen_weighted_lrp: weights size mismatch");
  RngStream edges = rng.fork(rng_tag::edges);
  const auto rates = rate_table(box, lambda, alpha, exec);
  const auto coords = lattice_coords(box);
  const int d = box.d;
  std::vector<std::vector<NodeId>> rows(n);

  row_scan(n, exec, [&](std::size_t i) {
    const std::int64_t* ci = coords.data() + i * std::size_t(d);
    const double wi = weights[i];
    const std::uint64_t base = std::uint64_t(i) * n;
    auto& row = rows[i];
    for (std::size_t j = i + 1; j < n; ++j) {
      const std::int64_t r2 = box.dist2(ci, coords.data() + j * std::size_t(d));
      const double m = wi * weights[j] * rates[std::size_t(r2)];
      const double u = edges.uniform_at(base + j);
      // 1 - exp(-m) <= m: a cheap reject covers almost every pair
      if (u < m && u < -std::expm1(-m)) row.push_back(NodeId(j));
    }
  });

  Graph g = assemble(n, rows);
  attach_lattice_positions(g, box);
  g.weights = weights;
  return g;
}

std::vector<double> pareto_weights(std::size_t n, double beta, RngStream weight_rng) {
  std::vector<double> w(n);
  const double inv_beta = 1.0 / beta;
  for (std::size_t v = 0; v < n; ++v)
    w[v] = std::pow(weight_rng.uniform_pos_at(v), -inv_beta);
  return w;
}

Graph gen_het_lrp(const LatticeBox& box, const HetLrpParams& params, RngStream rng, Exec exec) {
  box.validate();
  params.validate();
  const auto weights = pareto_weights(box.num_sites(), params.beta, rng.fork(rng_tag::weights));
  return gen_weighted_lrp(box, weights, params.lambda, params.alpha, rng, exec);
}

Graph gen_continuum(const ContinuumParams& params, RngStream rng, Exec exec) {
  params.validate();
  double volume = 1;
  for (int k = 0; k < params.d; ++k) volume *= params.L;

  RngStream count_rng = rng.fork(rng_tag::points).fork(0);
  RngStream coord_rng = rng.fork(rng_tag::points).fork(1);
  const std::uint64_t sampled = count_rng.next_poisson(params.nu * volume);
  const std::size_t n = sampled + (params.plant_origin ? 1 : 0);

  Graph g(n);
  g.dim = params.d;
  g.positions.assign(n * std::size_t(params.d), 0.0);
  const std::size_t first_sampled = params.plant_origin ? 1 : 0;
  for (std::uint64_t i = 0; i < sampled; ++i)
    for (int k = 0; k < params.d; ++k)
      g.positions[(first_sampled + i) * std::size_t(params.d) + k] =
          (coord_rng.uniform_at(i * std::uint64_t(params.d) + std::uint64_t(k)) - 0.5) * params.L;

  if (params.homogeneous_marks) {
    g.weights.assign(n, 1.0);
  } else {
    g.weights = pareto_weights(n, params.beta, rng.fork(rng_tag::weights));
  }

  RngStream edges = rng.fork(rng_tag::edges);
  std::vector<std::vector<NodeId>> rows(n);
  const int d = params.d;
  const double lambda = params.lambda, alpha = params.alpha;
  row_scan(n, exec, [&](std::size_t i) {
    const double* pi = g.positions.data() + i * std::size_t(d);
    const double wi = g.weights[i];
    const std::uint64_t base = std::uint64_t(i) * n;
    auto& row = rows[i];
    for (std::size_t j = i + 1; j < n; ++j) {
      const double* pj = g.positions.data() + j * std::size_t(d);
      double r2 = 0;
      for (int k = 0; k < d; ++k) {
        const double delta = pi[k] - pj[k];
        r2 += delta * delta;
      }
      const double u = edges.uniform_at(base + j);
      if (r2 == 0) {  // coincident points: edge probability 1
        row.push_back(NodeId(j));
        continue;
      }
      const double m = lambda * wi * g.weights[j] * std::pow(r2, -alpha / 2);
      if (u < m && u < -std::expm1(-m)) row.push_back(NodeId(j));
    }
  });

  auto weights = std::move(g.weights);
  auto positions = std::move(g.positions);
  Graph out = assemble(n, rows);
  out.dim = d;
  out.positions = std::move(positions);
  out.weights = std::move(weights);
  return out;
}

SiteBondSample gen_site_bond(const LatticeBox& box, const SiteBondParams& params, RngStream rng,
                             Exec exec) {
  box.validate();
  params.validate();
  const std::size_t n = box.num_sites();
  RngStream occ = rng.fork(rng_tag::occupation);
  std::vector<std::uint8_t> occupied(n);
  for (std::size_t v = 0; v < n; ++v) occupied[v] = occ.uniform_at(v) < params.r_star ? 1 : 0;

  RngStream edges = rng.fork(rng_tag::edges);
  const auto rates = rate_table(box, params.lambda_star, params.alpha, exec);
  const auto coords = lattice_coords(box);
  const int d = box.d;
  std::vector<std::vector<NodeId>> rows(n);

  row_scan(n, exec, [&](std::size_t i) {
    if (!occupied[i]) return;
    const std::int64_t* ci = coords.data() + i * std::size_t(d);
    const std::uint64_t base = std::uint64_t(i) * n;
    auto& row = rows[i];
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!occupied[j]) continue;
      const std::int64_t r2 = box.dist2(ci, coords.data() + j * std::size_t(d));
      const double m = rates[std::size_t(r2)];
      const double u = edges.uniform_at(base + j);
      if (u < m && u < -std::expm1(-m)) row.push_back(NodeId(j));
    }
  });

  SiteBondSample sample{assemble(n, rows), std::move(occupied)};
  attach_lattice_positions(sample.graph, box);
  return sample;
}

Graph sample_model(const ModelSpec& spec, RngStream rng, Exec exec, bool fast) {
  spec.validate();
  if (auto* er = std::get_if<ErParams>(&spec.params)) return gen_er(*er, rng, exec, fast);
  if (auto* nsw = std::get_if<NswParams>(&spec.params)) return gen_nsw(*nsw, rng);
  if (auto* nn = std::get_if<NnBondParams>(&spec.params))
    return gen_nn_bond(*spec.box, *nn, rng, exec);
  if (auto* hom = std::get_if<HomLrpParams>(&spec.params))
    return gen_hom_lrp(*spec.box, *hom, rng, exec, fast);
  if (auto* het = std::get_if<HetLrpParams>(&spec.params))
    return gen_het_lrp(*spec.box, *het, rng, exec);
  if (auto* cont = std::get_if<ContinuumParams>(&spec.params))
    return gen_continuum(*cont, rng, exec);
  if (auto* sb = std::get_if<SiteBondParams>(&spec.params))
    return gen_site_bond(*spec.box, *sb, rng, exec).graph;
  throw std::logic_error("sample_model: unhandled model");
}

}  // namespace percolab
