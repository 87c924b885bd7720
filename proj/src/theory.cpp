#include "percolab/theory.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace percolab {

double pgf_g0(const DegreeLaw& law, double z) {
  // Horner from the top coefficient
  double acc = 0;
  for (std::size_t k = law.weights.size(); k-- > 0;) acc = acc * z + law.weights[k];
  return acc;
}

double mean_degree(const DegreeLaw& law) {
  double mu = 0;
  for (std::size_t k = law.weights.size(); k-- > 1;) mu += double(k) * law.weights[k];
  return mu;
}

double pgf_g1(const DegreeLaw& law, double z) {
  const double mu = mean_degree(law);
  if (!(mu > 0)) throw std::invalid_argument("pgf_g1: mean degree is zero");
  // G1(z) = sum_{k>=1} k g_k z^{k-1} / mu, Horner on coefficients k*g_k
  double acc = 0;
  for (std::size_t k = law.weights.size(); k-- > 1;) acc = acc * z + double(k) * law.weights[k];
  return acc / mu;
}

double second_gen_mean(const DegreeLaw& law) {
  const double mu = mean_degree(law);
  if (!(mu > 0)) throw std::invalid_argument("second_gen_mean: mean degree is zero");
  double s = 0;
  for (std::size_t k = law.weights.size(); k-- > 2;)
    s += double(k - 1) * double(k) * law.weights[k];
  return s / mu;
}

TheoryReport giant_fraction(const DegreeLaw& law) {
  law.validate();
  TheoryReport report;
  report.mu = mean_degree(law);
  report.vartheta = second_gen_mean(law);

  if (report.vartheta <= 1) {
    report.z0 = 1.0;
    report.chi = 0.0;
    report.regime = report.vartheta == 1 ? "critical" : "subcritical";
    return report;
  }
  report.regime = "supercritical";

  // G1 is monotone on [0,1]: iterating from 0 converges to the smallest
  // fixed point.
  constexpr double tol = 1e-12;
  constexpr std::uint64_t max_iter = 1000000;
  double z = 0.0;
  report.converged = false;
  for (std::uint64_t it = 0; it < max_iter; ++it) {
    const double next = pgf_g1(law, z);
    report.iterations = it + 1;
    if (std::abs(next - z) < tol) {
      z = next;
      report.converged = true;
      break;
    }
    z = next;
  }
  report.z0 = z;
  report.chi = std::min(1.0, std::max(0.0, 1.0 - pgf_g0(law, z)));
  return report;
}

double distance_exponent(int d, double alpha) {
  if (!(alpha > d && alpha < 2.0 * d))
    throw std::invalid_argument("distance_exponent: need d < alpha < 2d");
  return 1.0 / std::log2(2.0 * d / alpha);
}

int benjamini_bound(int d, double alpha) {
  if (!(alpha > 0 && alpha < d)) throw std::invalid_argument("benjamini_bound: need 0 < alpha < d");
  double ratio = double(d) / (double(d) - alpha);
  // snap near-integer ratios so float noise cannot push the ceiling up
  const double snapped = std::round(ratio);
  if (std::abs(ratio - snapped) < 1e-9) ratio = snapped;
  return int(std::ceil(ratio));
}

double loglog_upper_coefficient(int d, double alpha, double beta) {
  const double ratio = beta * alpha / double(d);
  if (!(ratio > 1 && ratio < 2))
    throw std::invalid_argument("loglog_upper_coefficient: need d < beta*alpha < 2d");
  return 2.0 / std::abs(std::log(ratio - 1.0));
}

namespace {
bool near(double x, double y) { return std::abs(x - y) <= 1e-9 * std::max(1.0, std::abs(y)); }
}  // namespace

RegimeClass classify_regime(int d, double alpha, double beta) {
  if (d < 1 || !(alpha > 0) || !(beta > 0))
    throw std::invalid_argument("classify_regime: need d >= 1, alpha > 0, beta > 0");
  RegimeClass rc;
  const double dd = double(d);
  const double ba = beta * alpha;
  rc.delta = std::numeric_limits<double>::quiet_NaN();
  rc.loglog_coefficient = std::numeric_limits<double>::quiet_NaN();

  const bool on_boundary = near(alpha, dd) || near(ba, dd) || near(ba, 2 * dd) ||
                           near(alpha, 2 * dd) || (d == 1 && near(alpha, 2.0));
  if (on_boundary) return rc;  // everything stays tagged boundary

  if (alpha > dd && alpha < 2 * dd) rc.delta = distance_exponent(d, alpha);
  if (ba > dd && ba < 2 * dd) rc.loglog_coefficient = loglog_upper_coefficient(d, alpha, beta);

  // Degree regime
  if (std::min(alpha, ba) < dd) {
    rc.degree = DegreeRegime::infinite_degree;
  } else {
    rc.tau = ba / dd;
    rc.degree = rc.tau < 2 ? DegreeRegime::heavy_tail_infinite_variance
                           : DegreeRegime::heavy_tail_finite_variance;
  }

  // lambda_c regime
  if (rc.degree == DegreeRegime::infinite_degree) {
    // infinite degrees make the origin cluster infinite for every lambda
    rc.lambda_c = LambdaCRegime::zero;
  } else if (ba < 2 * dd) {
    rc.lambda_c = LambdaCRegime::zero;
  } else if (d == 1 && std::min(alpha, ba) > 2.0) {
    rc.lambda_c = LambdaCRegime::infinite;
  } else {
    rc.lambda_c = LambdaCRegime::positive_finite;
  }

  // distance regime
  if (alpha < dd) {
    rc.distance = DistanceRegime::bounded;
    rc.hop_bound = benjamini_bound(d, alpha);
  } else if (ba < dd) {
    // infinite degrees but alpha > d: the phase picture only conjectures
    // bounded distances here
    rc.distance = DistanceRegime::bounded;
    rc.distance_conjectured = true;
  } else if (ba < 2 * dd) {
    rc.distance = DistanceRegime::loglog;
  } else if (alpha < 2 * dd) {
    rc.distance = DistanceRegime::polylog;
  } else {
    rc.distance = DistanceRegime::linear;
  }
  return rc;
}

HomPercolation classify_hom_percolation(int d, double alpha, double lambda) {
  if (d < 1 || !(alpha > 0)) throw std::invalid_argument("classify_hom_percolation: bad arguments");
  const double dd = double(d);
  if (near(alpha, dd)) return HomPercolation::boundary;
  if (alpha < dd) return HomPercolation::always;
  if (d >= 2) return HomPercolation::for_p_near_1;
  // d == 1
  if (near(alpha, 2.0)) return lambda > 1 ? HomPercolation::for_p_near_1 : HomPercolation::never;
  if (alpha > 2.0) return HomPercolation::never;
  return HomPercolation::for_p_near_1;
}

std::string to_string(DegreeRegime r) {
  switch (r) {
    case DegreeRegime::infinite_degree: return "INFINITE_DEGREE";
    case DegreeRegime::heavy_tail_infinite_variance: return "HEAVY_TAIL_INF_VAR";
    case DegreeRegime::heavy_tail_finite_variance: return "HEAVY_TAIL_FIN_VAR";
    case DegreeRegime::boundary: return "BOUNDARY";
  }
  return "?";
}

std::string to_string(LambdaCRegime r) {
  switch (r) {
    case LambdaCRegime::zero: return "ZERO";
    case LambdaCRegime::positive_finite: return "POSITIVE_FINITE";
    case LambdaCRegime::infinite: return "INFINITE";
    case LambdaCRegime::boundary: return "BOUNDARY";
  }
  return "?";
}

std::string to_string(DistanceRegime r) {
  switch (r) {
    case DistanceRegime::bounded: return "BOUNDED";
    case DistanceRegime::loglog: return "LOGLOG";
    case DistanceRegime::polylog: return "POLYLOG";
    case DistanceRegime::linear: return "LINEAR";
    case DistanceRegime::boundary: return "BOUNDARY";
  }
  return "?";
}

std::string to_string(HomPercolation r) {
  switch (r) {
    case HomPercolation::always: return "ALWAYS";
    case HomPercolation::for_p_near_1: return "FOR_P_NEAR_1";
    case HomPercolation::never: return "NEVER";
    case HomPercolation::boundary: return "BOUNDARY";
  }
  return "?";
}

}  // namespace percolab
