// Independent brute-force oracles used to freeze expected values.  These
// deliberately avoid the library's own algorithms: reachability by boolean
// matrix closure, distances by Floyd-Warshall, triangles by triple
// enumeration, integrals by adaptive Simpson, and so on.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <vector>

#include "percolab/graph.hpp"
#include "percolab/rng.hpp"

namespace oracles {

// Transitive-closure reachability matrix (O(n^3), small n only).
inline std::vector<std::vector<bool>> reachability(const percolab::Graph& g) {
  const std::size_t n = g.num_nodes;
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (std::size_t v = 0; v < n; ++v) {
    reach[v][v] = true;
    for (auto w : g.adjacency[v]) reach[v][w] = true;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (reach[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (reach[k][j]) reach[i][j] = true;
  return reach;
}

// All-pairs shortest hop counts by Floyd-Warshall; -1 for unreachable.
inline std::vector<std::vector<std::int64_t>> floyd_warshall(const percolab::Graph& g) {
  const std::size_t n = g.num_nodes;
  constexpr std::int64_t inf = std::int64_t(1) << 60;
  std::vector<std::vector<std::int64_t>> dist(n, std::vector<std::int64_t>(n, inf));
  for (std::size_t v = 0; v < n; ++v) {
    dist[v][v] = 0;
    for (auto w : g.adjacency[v])
      if (w != v) dist[v][w] = 1;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        dist[i][j] = std::min(dist[i][j], dist[i][k] + dist[k][j]);
  for (auto& row : dist)
    for (auto& x : row)
      if (x >= inf) x = -1;
  return dist;
}

// Global transitivity by exhaustive triple enumeration on a simple view.
inline double transitivity_by_triples(const percolab::Graph& g) {
  const std::size_t n = g.num_nodes;
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (std::size_t v = 0; v < n; ++v)
    for (auto w : g.adjacency[v])
      if (w != v) adj[v][w] = true;
  std::size_t closed = 0, triples = 0;
  for (std::size_t centre = 0; centre < n; ++centre)
    for (std::size_t a = 0; a < n; ++a) {
      if (a == centre || !adj[centre][a]) continue;
      for (std::size_t b = a + 1; b < n; ++b) {
        if (b == centre || !adj[centre][b]) continue;
        ++triples;
        if (adj[a][b]) ++closed;
      }
    }
  if (triples == 0) return 0.0;
  return double(closed) / double(triples);
}

// Poisson pmf via lgamma (stable for large k).
inline double poisson_pmf(double mean, std::uint64_t k) {
  return std::exp(-mean + double(k) * std::log(mean) - std::lgamma(double(k) + 1));
}

// Total variation between an empirical histogram and a pmf.
inline double tv_distance(const std::vector<std::uint64_t>& histogram, double total,
                          const std::function<double(std::uint64_t)>& pmf,
                          std::uint64_t pmf_tail = 400) {
  double tv = 0;
  double pmf_mass_seen = 0;
  for (std::uint64_t k = 0; k < std::max<std::uint64_t>(histogram.size(), pmf_tail); ++k) {
    const double emp = k < histogram.size() ? double(histogram[k]) / total : 0.0;
    const double p = pmf(k);
    pmf_mass_seen += p;
    tv += std::abs(emp - p);
  }
  tv += 1.0 - pmf_mass_seen;  // pmf mass beyond the scanned range
  return tv / 2;
}

// Adaptive Simpson quadrature on [a,b].
inline double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                               double tol = 1e-10, int depth = 30) {
  auto simpson = [&](double lo, double hi) {
    return (hi - lo) / 6 * (f(lo) + 4 * f((lo + hi) / 2) + f(hi));
  };
  std::function<double(double, double, double, int)> rec = [&](double lo, double hi, double whole,
                                                               int d) -> double {
    const double mid = (lo + hi) / 2;
    const double left = simpson(lo, mid), right = simpson(mid, hi);
    if (d <= 0 || std::abs(left + right - whole) < 15 * tol) return left + right;
    return rec(lo, mid, left, d - 1) + rec(mid, hi, right, d - 1);
  };
  return rec(a, b, simpson(a, b), depth);
}

// integral over the centred square [-a,a]^2 of f(|x|), via the exact
// arc-length of circles clipped to the square.
inline double radial_integral_square(const std::function<double(double)>& f, double a) {
  auto arc = [&](double r) {
    if (r <= a) return 2 * M_PI * r;
    if (r >= a * std::sqrt(2.0)) return 0.0;
    return 2 * M_PI * r - 8 * r * std::acos(a / r);
  };
  auto g = [&](double r) { return f(r) * arc(r); };
  return adaptive_simpson(g, 0, a, 1e-10) + adaptive_simpson(g, a, a * std::sqrt(2.0), 1e-10);
}

// Random multigraph on n nodes with m uniformly chosen pairs (loops allowed).
inline percolab::Graph random_multigraph(std::size_t n, std::size_t m, percolab::RngStream& rng) {
  percolab::Graph g(n);
  for (std::size_t e = 0; e < m; ++e) {
    const auto u = percolab::NodeId(rng.next_below(n));
    const auto v = percolab::NodeId(rng.next_below(n));
    g.add_edge(u, v);
  }
  return g;
}

// Random simple graph: each pair present with probability p.
inline percolab::Graph random_simple_graph(std::size_t n, double p, percolab::RngStream& rng) {
  percolab::Graph g(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (rng.next_uniform() < p) g.add_edge(percolab::NodeId(i), percolab::NodeId(j));
  return g;
}

}  // namespace oracles
