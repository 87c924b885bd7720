#include "percolab/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "percolab/distance.hpp"

namespace percolab {

DegreeSummary degree_summary(const Graph& g) {
  DegreeSummary s;
  std::size_t max_deg = 0;
  for (NodeId v = 0; v < g.num_nodes; ++v) max_deg = std::max(max_deg, g.degree(v));
  s.histogram.assign(max_deg + 1, 0);
  double total = 0;
  for (NodeId v = 0; v < g.num_nodes; ++v) {
    ++s.histogram[g.degree(v)];
    total += double(g.degree(v));
  }
  s.mean = g.num_nodes ? total / double(g.num_nodes) : 0.0;
  s.survival.assign(s.histogram.size(), 0.0);
  double above = 0;
  for (std::size_t k = s.histogram.size(); k-- > 0;) {
    s.survival[k] = g.num_nodes ? above / double(g.num_nodes) : 0.0;
    above += double(s.histogram[k]);
  }
  return s;
}

TailFit hill_tail(std::vector<double> samples, double fraction) {
  if (samples.size() < 100) throw std::invalid_argument("hill_tail: need at least 100 samples");
  if (!(fraction > 0 && fraction <= 0.2))
    throw std::invalid_argument("hill_tail: fraction must lie in (0, 0.2]");
  for (double x : samples)
    if (!(x > 0)) throw std::invalid_argument("hill_tail: samples must be positive");

  const std::size_t k = std::size_t(std::ceil(fraction * double(samples.size())));
  if (k < 10) throw std::invalid_argument("hill_tail: fewer than 10 order statistics");
  if (k + 1 > samples.size()) throw std::invalid_argument("hill_tail: fraction too large");

  std::partial_sort(samples.begin(), samples.begin() + std::ptrdiff_t(k + 1), samples.end(),
                    std::greater<double>());
  const double threshold = samples[k];  // X_(k+1)
  double sum = 0;
  for (std::size_t i = 0; i < k; ++i) sum += std::log(samples[i] / threshold);
  if (!(sum > 0)) throw std::invalid_argument("hill_tail: zero spacings (samples all equal?)");
  return TailFit{double(k) / sum, k, threshold};
}

std::vector<double> degree_tail_samples(const Graph& g, RngStream rng) {
  std::vector<double> out;
  out.reserve(g.num_nodes);
  for (NodeId v = 0; v < g.num_nodes; ++v) {
    const std::size_t deg = g.degree(v);
    if (deg == 0) continue;  // log undefined at 0
    out.push_back(double(deg) + rng.uniform_at(v));  // break integer ties
  }
  return out;
}

bool spans_box(const Graph& g, const LatticeBox& box, const ComponentLabeling& labeling) {
  std::size_t stride = 1;
  for (int k = 1; k < box.d; ++k) stride *= std::size_t(box.side);
  // row-major: coord_0 == 0 is ids [0, stride); coord_0 == side-1 the last block
  std::vector<std::uint8_t> left(labeling.sizes.size(), 0);
  for (std::size_t v = 0; v < stride; ++v) left[labeling.label[v]] = 1;
  const std::size_t right_base = (std::size_t(box.side) - 1) * stride;
  for (std::size_t v = right_base; v < right_base + stride; ++v)
    if (left[labeling.label[v]]) return true;
  return false;
}

bool spans_box(const Graph& g, const LatticeBox& box) {
  return spans_box(g, box, components(g));
}

namespace {

CrossingEstimate wilson(std::uint64_t hits, std::uint64_t n) {
  CrossingEstimate e;
  e.hits = hits;
  e.replicates = n;
  if (n == 0) return e;
  const double z = 1.959963984540054;
  const double p = double(hits) / double(n);
  e.p_hat = p;
  const double z2n = z * z / double(n);
  const double centre = (p + z2n / 2) / (1 + z2n);
  const double half = z * std::sqrt(p * (1 - p) / double(n) + z2n / (4 * double(n))) / (1 + z2n);
  e.ci_low = std::max(0.0, centre - half);
  e.ci_high = std::min(1.0, centre + half);
  return e;
}

}  // namespace

CrossingEstimate crossing_probability(const ModelSpec& spec, std::uint64_t replicates,
                                      RngStream rng, Exec exec) {
  if (!spec.box) throw std::invalid_argument("crossing_probability: lattice model required");
  if (spec.box->boundary != Boundary::free)
    throw std::invalid_argument("crossing_probability: free boundary enforced");
  std::uint64_t hits = 0;
  const bool par = exec == Exec::parallel;
#pragma omp parallel for schedule(dynamic) reduction(+ : hits) if (par)
  for (std::int64_t r = 0; r < std::int64_t(replicates); ++r) {
    const Graph g = sample_model(spec, rng.fork(std::uint64_t(r)), Exec::serial);
    if (spans_box(g, *spec.box)) ++hits;
  }
  return wilson(hits, replicates);
}

namespace {

void set_free_parameter(ModelSpec& spec, FreeParameter which, double value) {
  if (which == FreeParameter::p) {
    if (auto* nn = std::get_if<NnBondParams>(&spec.params)) nn->p = value;
    else if (auto* hom = std::get_if<HomLrpParams>(&spec.params)) hom->p = value;
    else throw std::invalid_argument("bisect_critical: model has no p parameter");
  } else {
    if (auto* hom = std::get_if<HomLrpParams>(&spec.params)) hom->lambda = value;
    else if (auto* het = std::get_if<HetLrpParams>(&spec.params)) het->lambda = value;
    else if (auto* sb = std::get_if<SiteBondParams>(&spec.params)) sb->lambda_star = value;
    else throw std::invalid_argument("bisect_critical: model has no lambda parameter");
  }
}

}  // namespace

BisectResult bisect_critical(ModelSpec spec, FreeParameter which, double lo, double hi,
                             double target, double tol, std::uint64_t replicates, RngStream rng) {
  if (!(lo < hi)) throw std::invalid_argument("bisect_critical: need lo < hi");
  if (!(tol > 0)) throw std::invalid_argument("bisect_critical: need tol > 0");
  BisectResult out;

  // The same rng at every evaluation shares the per-pair uniforms, so the
  // empirical crossing curve is monotone in the parameter replicate by
  // replicate.
  auto eval = [&](double value) {
    ModelSpec s = spec;
    set_free_parameter(s, which, value);
    return crossing_probability(s, replicates, rng);
  };

  const CrossingEstimate at_lo = eval(lo);
  const CrossingEstimate at_hi = eval(hi);
  out.monotone_ok = at_lo.p_hat <= at_hi.p_hat && at_lo.p_hat <= target && target <= at_hi.p_hat;
  if (!out.monotone_ok) {
    out.lo = lo;
    out.hi = hi;
    out.estimate = (lo + hi) / 2;
    return out;
  }

  while (hi - lo > tol) {
    const double mid = (lo + hi) / 2;
    out.midpoints.push_back(mid);
    if (eval(mid).p_hat < target) lo = mid;
    else hi = mid;
  }
  out.lo = lo;
  out.hi = hi;
  out.estimate = (lo + hi) / 2;
  return out;
}

namespace {

double quantile(std::vector<double>& sorted, double q) {
  if (sorted.empty()) return 0;
  const double pos = q * double(sorted.size() - 1);
  const std::size_t i = std::size_t(pos);
  const double frac = pos - double(i);
  if (i + 1 >= sorted.size()) return sorted.back();
  return sorted[i] * (1 - frac) + sorted[i + 1] * frac;
}

}  // namespace

std::vector<RadiusProfile> chemical_distance_profile(const Graph& g, const LatticeBox& box,
                                                     const std::vector<double>& radii,
                                                     std::size_t pairs_per_radius,
                                                     RngStream rng) {
  if (pairs_per_radius < 1)
    throw std::invalid_argument("chemical_distance_profile: pairs_per_radius >= 1");
  std::vector<RadiusProfile> out(radii.size());
  for (std::size_t ri = 0; ri < radii.size(); ++ri) out[ri].radius = radii[ri];
  if (!g.has_positions()) throw std::invalid_argument("chemical_distance_profile: needs positions");

  const ComponentLabeling labeling = components(g);
  std::vector<NodeId> members;
  for (NodeId v = 0; v < g.num_nodes; ++v)
    if (labeling.label[v] == labeling.largest) members.push_back(v);
  if (members.empty()) return out;

  const std::size_t num_sources = std::min<std::size_t>(8, pairs_per_radius);
  const std::size_t per_source =
      (pairs_per_radius + num_sources - 1) / num_sources;  // targets per (source, radius)

  RngStream pick = rng.fork(0);
  std::vector<NodeId> sources(num_sources);
  for (auto& s : sources) s = members[pick.next_below(members.size())];

  const int d = g.dim;
  // targets[si][ri] chosen up-front; one BFS per source serves all radii
  std::vector<std::vector<std::vector<NodeId>>> targets(
      num_sources, std::vector<std::vector<NodeId>>(radii.size()));
  for (std::size_t si = 0; si < num_sources; ++si) {
    RngStream trng = rng.fork(1 + si);
    const double* ps = g.position(sources[si]);
    std::vector<std::vector<NodeId>> candidates(radii.size());
    for (NodeId v : members) {
      if (v == sources[si]) continue;
      const double* pv = g.position(v);
      double r2 = 0;
      for (int k = 0; k < d; ++k) {
        const double delta = ps[k] - pv[k];
        r2 += delta * delta;
      }
      const double r = std::sqrt(r2);
      for (std::size_t ri = 0; ri < radii.size(); ++ri)
        if (r >= radii[ri] && r <= radii[ri] * 1.05) candidates[ri].push_back(v);
    }
    for (std::size_t ri = 0; ri < radii.size(); ++ri) {
      auto& cand = candidates[ri];
      const std::size_t want = std::min(per_source, cand.size());
      for (std::size_t t = 0; t < want; ++t) {
        const std::size_t j = t + trng.next_below(cand.size() - t);
        std::swap(cand[t], cand[j]);
        targets[si][ri].push_back(cand[t]);
      }
    }
  }

  std::vector<std::vector<std::vector<std::int64_t>>> hops(
      num_sources, std::vector<std::vector<std::int64_t>>(radii.size()));
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t si = 0; si < std::int64_t(num_sources); ++si) {
    const auto dist = bfs_all(g, sources[std::size_t(si)]);
    for (std::size_t ri = 0; ri < radii.size(); ++ri)
      for (NodeId t : targets[std::size_t(si)][ri])
        hops[std::size_t(si)][ri].push_back(dist[t]);
  }

  for (std::size_t ri = 0; ri < radii.size(); ++ri) {
    std::vector<double> values;
    for (std::size_t si = 0; si < num_sources; ++si)
      for (std::int64_t h : hops[si][ri]) {
        out[ri].hops.push_back(h);
        values.push_back(double(h));
      }
    out[ri].count = values.size();
    if (!values.empty()) {
      std::sort(values.begin(), values.end());
      out[ri].median = quantile(values, 0.5);
      out[ri].q25 = quantile(values, 0.25);
      out[ri].q75 = quantile(values, 0.75);
    }
  }
  (void)box;
  return out;
}

std::vector<RadiusProfile> chemical_distance_profile(const ModelSpec& spec,
                                                     const std::vector<double>& radii,
                                                     std::size_t pairs_per_radius, RngStream rng,
                                                     Exec exec, bool fast) {
  if (!spec.box) throw std::invalid_argument("chemical_distance_profile: lattice model required");
  const Graph g = sample_model(spec, rng, exec, fast);
  return chemical_distance_profile(g, *spec.box, radii, pairs_per_radius, rng.fork(777));
}

BoundedHopResult bounded_two_hop_check(const LatticeBox& box, const HomLrpParams& params,
                                       double r_min, std::size_t pairs, RngStream rng) {
  box.validate();
  params.validate();
  const std::size_t n = box.num_sites();
  // Same substream and pair indexing as gen_hom_lrp's exhaustive loop, so
  // the edges probed here are the edges that generator would realise.
  RngStream edges = rng.fork(rng_tag::edges);
  const std::int64_t max_r2 = box.d * (box.side - 1) * (box.side - 1);
  std::vector<double> table(std::size_t(max_r2) + 1, 0.0);
#pragma omp parallel for schedule(static)
  for (std::int64_t r2 = 1; r2 <= max_r2; ++r2)
    table[std::size_t(r2)] = hom_edge_probability(params, r2);

  const int d = box.d;
  std::vector<std::int64_t> coords(n * std::size_t(d));
  for (std::size_t v = 0; v < n; ++v) box.coords_of(v, coords.data() + v * std::size_t(d));

  auto has_edge = [&](std::size_t a, std::size_t b) {
    if (a == b) return false;
    if (a > b) std::swap(a, b);
    const std::int64_t r2 =
        box.dist2(coords.data() + a * std::size_t(d), coords.data() + b * std::size_t(d));
    return edges.uniform_at(std::uint64_t(a) * n + b) < table[std::size_t(r2)];
  };

  RngStream pick = rng.fork(99);
  BoundedHopResult res;
  for (std::size_t t = 0; t < pairs; ++t) {
    std::size_t x, y;
    for (;;) {
      x = pick.next_below(n);
      y = pick.next_below(n);
      if (x == y) continue;
      const std::int64_t r2 =
          box.dist2(coords.data() + x * std::size_t(d), coords.data() + y * std::size_t(d));
      if (double(r2) >= r_min * r_min) break;
    }
    ++res.pairs;
    bool ok = has_edge(x, y);
    if (!ok) {
      for (std::size_t z = 0; z < n && !ok; ++z) {
        if (z == x || z == y) continue;
        ok = has_edge(x, z) && has_edge(z, y);
      }
    }
    if (ok) ++res.within_bound;
  }
  res.fraction = res.pairs ? double(res.within_bound) / double(res.pairs) : 0.0;
  return res;
}

BoxScalingResult box_cluster_scaling(int d, const HomLrpParams& params,
                                     const std::vector<std::int64_t>& sides,
                                     std::uint64_t replicates, RngStream rng) {
  if (sides.empty()) throw std::invalid_argument("box_cluster_scaling: no sides");
  if (!(params.alpha > d && params.alpha < 2.0 * d))
    throw std::invalid_argument("box_cluster_scaling: need alpha in (d, 2d)");
  BoxScalingResult out;

  const std::int64_t smallest = *std::min_element(sides.begin(), sides.end());
  {
    ModelSpec spec;
    spec.params = params;
    spec.box = LatticeBox{d, smallest, Boundary::free};
    const CrossingEstimate pre = crossing_probability(spec, std::min<std::uint64_t>(replicates, 200),
                                                      rng.fork(0xC0FFEE));
    if (pre.p_hat < 0.9) {
      out.precondition_ok = false;
      out.warning = "crossing probability at the smallest side is only " +
                    std::to_string(pre.p_hat) + "; frequencies may be misleading";
    }
  }

  for (std::size_t si = 0; si < sides.size(); ++si) {
    const LatticeBox box{d, sides[si], Boundary::free};
    BoxScalingPoint point;
    point.side = sides[si];
    point.replicates = replicates;
    point.threshold = std::pow(double(sides[si]), params.alpha / 2);
    std::uint64_t hits = 0;
#pragma omp parallel for schedule(dynamic) reduction(+ : hits)
    for (std::int64_t r = 0; r < std::int64_t(replicates); ++r) {
      // stream depends on (side, replicate) only: coupled across lambda
      const Graph g = gen_hom_lrp(box, params,
                                  rng.fork((std::uint64_t(si) << 32) | std::uint64_t(r)),
                                  Exec::serial);
      if (double(components(g).largest_size()) >= point.threshold) ++hits;
    }
    point.frequency = double(hits) / double(replicates);
    out.points.push_back(point);
  }
  return out;
}

}  // namespace percolab
