#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "percolab/graph.hpp"

namespace percolab {

// At least ell sites of a box B_v that are connected within the enlargement
// B_v^(K).  find_semi_clusters returns the maximal ones, so two distinct
// semi-clusters of the same box are never connected within B_v^(K).
struct SemiCluster {
  std::vector<NodeId> sites;  // node ids inside B_v
};

// g must carry integer lattice positions covering all of B_v^(K).
// origin: corner of B_v; boxes are origin + [0,M-1]^d, enlargement pads K.
std::vector<SemiCluster> find_semi_clusters(const Graph& g, const std::vector<std::int64_t>& origin,
                                            std::int64_t M, std::int64_t K, double ell);

// Stage schedule kappa_n = (n+1)^-theta, a_n = (n+1)^delta with
// delta > theta > 1 and delta integer-valued (box sides must nest exactly).
struct RenormSchedule {
  std::int64_t M = 4;        // a_0, base box side
  std::int64_t K = 0;        // enlargement width
  double delta = 2;          // integer-valued
  double theta_renorm = 1.5;
  double kappa0 = 0.5;
  int n_max = 2;

  void validate() const {
    if (M < 1) throw std::invalid_argument("renorm: M must be >= 1");
    if (K < 0) throw std::invalid_argument("renorm: K must be >= 0");
    if (!(delta > theta_renorm && theta_renorm > 1))
      throw std::invalid_argument("renorm: need delta > theta > 1");
    if (std::abs(delta - std::round(delta)) > 1e-9)
      throw std::invalid_argument("renorm: delta must be integer-valued");
    if (!(kappa0 > 0 && kappa0 < 1)) throw std::invalid_argument("renorm: kappa0 in (0,1)");
    if (n_max < 0) throw std::invalid_argument("renorm: n_max must be >= 0");
  }

  double kappa(int n) const { return n == 0 ? kappa0 : std::pow(n + 1, -theta_renorm); }
  std::int64_t a(int n) const {
    return n == 0 ? M : std::int64_t(std::llround(std::pow(n + 1, delta)));
  }
  std::int64_t box_side(int n) const {
    std::int64_t m = M;
    for (int i = 1; i <= n; ++i) m *= a(i);
    return m;
  }
  double density_u(int n) const {
    double u = kappa0;
    for (int i = 1; i <= n; ++i) u *= kappa(i);
    return u;
  }
};

struct RenormCertificate {
  bool good = false;
  int stage = 0;
  std::vector<std::int64_t> origin;
  // stage 0: number of (kappa0 M^d)-semi-clusters found
  std::size_t semi_clusters = 0;
  // stage >= 1:
  std::uint64_t good_subboxes = 0;
  double required_subboxes = 0;    // kappa_n a_n^d
  std::size_t clusters_checked = 0;
  bool clusters_connected = true;  // condition (b)
  std::vector<RenormCertificate> children;  // per-subbox, stage >= 1 only
};

// Recursive goodness of the n-stage box at lattice corner `origin`:
//   stage 0:  exactly one (kappa0 M^d)-semi-cluster;
//   stage n:  (a) at least kappa_n a_n^d good (n-1)-boxes, and (b) all
//             (M_{n-1}^d u_{n-1})-semi-clusters of good (n-1)-boxes are
//             connected within B_{n,v}^(K).
// g must cover B_{n,v}^(K); stage > n_max is rejected.
RenormCertificate renorm_goodness(const Graph& g, const RenormSchedule& schedule, int stage,
                                  const std::vector<std::int64_t>& origin);

}  // namespace percolab
