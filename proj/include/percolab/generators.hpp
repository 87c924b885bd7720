#pragma once

#include <cstdint>
#include <vector>

#include "percolab/degree_law.hpp"
#include "percolab/graph.hpp"
#include "percolab/lattice.hpp"
#include "percolab/models.hpp"
#include "percolab/rng.hpp"

namespace percolab {

// Every generator is a pure function of (params, seed, stream).  The heavy
// pair loops exist twice: a serial reference and an OpenMP version.  Both
// read edge uniforms by pair index from a counter-based stream, so their
// output is bit-identical; tests assert that and the benchmark compares
// their speed.
enum class Exec { serial, parallel };

// Erdos-Renyi on n labelled nodes.  `fast` switches the exhaustive
// per-pair loop for geometric skip sampling: the same product-Bernoulli law,
// O(edges) instead of O(n^2), but a different consumption of the stream.
Graph gen_er(const ErParams& params, RngStream rng, Exec exec = Exec::parallel,
             bool fast = false);

// Power-law degree law g_k = k^-(tau+1)/Z on 1..k_max, g_0 = 0.
DegreeLaw nsw_degree_law(const NswParams& params);

// Uniform stub matching.  Odd stub totals get one extra stub at a uniformly
// chosen node.  Self-loops and parallel edges are kept (simplify() reports
// them).
Graph molloy_reed(const std::vector<std::uint32_t>& degrees, RngStream rng);

// Degrees i.i.d. from nsw_degree_law, then molloy_reed.
Graph gen_nsw(const NswParams& params, RngStream rng);

// Nearest-neighbour bond percolation on the box.
Graph gen_nn_bond(const LatticeBox& box, const NnBondParams& params, RngStream rng,
                  Exec exec = Exec::parallel);

// Homogeneous long-range percolation: p at distance 1, 1-exp(-lambda r^-alpha)
// beyond.  `fast` groups pairs by displacement class and skip-samples within
// each class (free boundary only); distributionally identical to the pair
// loop, O(edges + classes).
Graph gen_hom_lrp(const LatticeBox& box, const HomLrpParams& params, RngStream rng,
                  Exec exec = Exec::parallel, bool fast = false);

// Heterogeneous (scale-free) long-range percolation with i.i.d. Pareto(1,beta)
// weights, edge probability 1-exp(-lambda W_x W_y r^-alpha).
Graph gen_het_lrp(const LatticeBox& box, const HetLrpParams& params, RngStream rng,
                  Exec exec = Exec::parallel);

// Same edge law with externally supplied weights; gen_het_lrp draws Pareto
// weights and delegates here.  Exposed so couplings can pin the weights while
// sharing the edge uniforms.
Graph gen_weighted_lrp(const LatticeBox& box, const std::vector<double>& weights,
                       double lambda, double alpha, RngStream rng,
                       Exec exec = Exec::parallel);

// Marked Poisson point process on [-L/2, L/2]^d with the same edge law.
Graph gen_continuum(const ContinuumParams& params, RngStream rng,
                    Exec exec = Exec::parallel);

struct SiteBondSample {
  Graph graph;
  std::vector<std::uint8_t> occupied;  // per-site mask
};

// Site-bond percolation: sites occupied with probability r_star, bonds with
// 1-exp(-lambda_star r^-alpha) between occupied sites; unoccupied sites stay
// isolated.
SiteBondSample gen_site_bond(const LatticeBox& box, const SiteBondParams& params, RngStream rng,
                             Exec exec = Exec::parallel);

// Pareto(1, beta) marks by inverse transform W = U^(-1/beta), counter-based.
std::vector<double> pareto_weights(std::size_t n, double beta, RngStream weight_rng);

// Edge probability of the homogeneous model at squared distance r2 (p at
// r2 == 1, 1-exp(-lambda r^-alpha) beyond).  Shared with the lazy-edge
// diagnostics so they probe exactly what the generator realises.
double hom_edge_probability(const HomLrpParams& params, std::int64_t r2);

// Dispatch by ModelSpec (site-bond yields its graph part).
Graph sample_model(const ModelSpec& spec, RngStream rng, Exec exec = Exec::parallel,
                   bool fast = false);

}  // namespace percolab
