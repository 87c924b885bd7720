#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "percolab/components.hpp"
#include "percolab/generators.hpp"
#include "percolab/graph.hpp"
#include "percolab/models.hpp"
#include "percolab/rng.hpp"

namespace percolab {

struct DegreeSummary {
  std::vector<std::uint64_t> histogram;  // count per degree
  double mean = 0;
  std::vector<double> survival;          // survival[k] = P[D > k]
};

DegreeSummary degree_summary(const Graph& g);

struct TailFit {
  double tau_hat = 0;
  std::size_t k_count = 0;   // order statistics used
  double threshold = 0;      // smallest order statistic used, X_(k+1)
};

// Hill estimator on the top ceil(fraction * n) order statistics.
// Rejects non-positive samples, k < 10, and zero spacings.
TailFit hill_tail(std::vector<double> samples, double fraction);

// Degrees as positive tail samples: zeros dropped, integer ties broken by
// adding uniform(0,1) jitter.
std::vector<double> degree_tail_samples(const Graph& g, RngStream rng);

struct CrossingEstimate {
  double p_hat = 0;
  double ci_low = 0, ci_high = 0;  // 95% Wilson interval
  std::uint64_t hits = 0;
  std::uint64_t replicates = 0;
};

// Does any component touch both the x0=0 face and the x0=side-1 face?
bool spans_box(const Graph& g, const LatticeBox& box, const ComponentLabeling& labeling);
bool spans_box(const Graph& g, const LatticeBox& box);

// Fraction of replicates whose configuration crosses the box left-to-right.
// Replicate r uses rng.fork(r); the free boundary is enforced.
CrossingEstimate crossing_probability(const ModelSpec& spec, std::uint64_t replicates,
                                      RngStream rng, Exec exec = Exec::parallel);

enum class FreeParameter { p, lambda };

struct BisectResult {
  double estimate = 0;
  double lo = 0, hi = 0;      // final bracketing interval
  bool monotone_ok = false;   // endpoint crossing estimates straddle the target
  std::vector<double> midpoints;
};

// Bisect the free parameter until hi-lo < tol, targeting the given crossing
// probability.  Fails (monotone_ok=false) when the endpoint estimates do not
// straddle the target.
BisectResult bisect_critical(ModelSpec spec, FreeParameter which, double lo, double hi,
                             double target, double tol, std::uint64_t replicates,
                             RngStream rng);

struct RadiusProfile {
  double radius = 0;
  std::size_t count = 0;  // admissible pairs found (0 is reported, not dropped)
  double median = 0, q25 = 0, q75 = 0;
  std::vector<std::int64_t> hops;  // raw per-pair distances
};

// Median/quartiles of graph distance between node pairs at Euclidean
// distance in [r, 1.05 r], both endpoints conditioned into the largest
// component.  Pairs are grouped by source so one BFS serves many targets.
std::vector<RadiusProfile> chemical_distance_profile(const Graph& g, const LatticeBox& box,
                                                     const std::vector<double>& radii,
                                                     std::size_t pairs_per_radius,
                                                     RngStream rng);

// Convenience: sample the model, then profile it.
std::vector<RadiusProfile> chemical_distance_profile(const ModelSpec& spec,
                                                     const std::vector<double>& radii,
                                                     std::size_t pairs_per_radius,
                                                     RngStream rng, Exec exec = Exec::parallel,
                                                     bool fast = false);

struct BoundedHopResult {
  std::size_t pairs = 0;
  std::size_t within_bound = 0;
  double fraction = 0;
};

// Checks d(x,y) <= 2 for sampled pairs at distance >= r_min in the
// homogeneous lattice model without materialising the graph: edges are
// re-evaluated lazily from the same counter-based uniforms gen_hom_lrp uses.
BoundedHopResult bounded_two_hop_check(const LatticeBox& box, const HomLrpParams& params,
                                       double r_min, std::size_t pairs, RngStream rng);

struct BoxScalingPoint {
  std::int64_t side = 0;
  double frequency = 0;        // fraction of replicates with |C_N| >= N^(alpha/2)
  double threshold = 0;        // N^(alpha/2)
  std::uint64_t replicates = 0;
};

struct BoxScalingResult {
  std::vector<BoxScalingPoint> points;
  bool precondition_ok = true;  // crossing ~ 1 at the smallest side
  std::string warning;
};

// Frequency of |C_N| >= N^(alpha/2) over replicates for each side N
// (homogeneous long-range model, alpha in (d,2d)).
BoxScalingResult box_cluster_scaling(int d, const HomLrpParams& params,
                                     const std::vector<std::int64_t>& sides,
                                     std::uint64_t replicates, RngStream rng);

}  // namespace percolab
