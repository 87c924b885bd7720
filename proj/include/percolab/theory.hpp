#pragma once

#include <cstdint>
#include <string>

#include "percolab/degree_law.hpp"

namespace percolab {

// Generating-function side of the branching heuristic.

// G0(z) = sum_k g_k z^k.
double pgf_g0(const DegreeLaw& law, double z);
// G1(z) = sum_{k>=1} k g_k z^{k-1} / mu.  Rejects mu == 0.
double pgf_g1(const DegreeLaw& law, double z);

double mean_degree(const DegreeLaw& law);
// Second-generation mean: (1/mu) sum (k-1) k g_k.
double second_gen_mean(const DegreeLaw& law);

struct TheoryReport {
  double mu = 0;        // mean degree
  double vartheta = 0;  // second-generation mean
  double z0 = 1;        // smallest fixed point of G1 in [0,1]
  double chi = 0;       // giant fraction 1 - G0(z0)
  bool converged = true;
  std::uint64_t iterations = 0;
  std::string regime;   // "subcritical" | "supercritical" | "critical"
};

// Smallest fixed point of G1 by monotone iteration from z=0 (tolerance
// 1e-12, at most 1e6 steps; non-convergence is reported, never swallowed).
TheoryReport giant_fraction(const DegreeLaw& law);

// Delta with Delta^-1 = log2(2d/alpha); requires d < alpha < 2d.
double distance_exponent(int d, double alpha);

// ceil(d / (d - alpha)); requires 0 < alpha < d.
int benjamini_bound(int d, double alpha);

// 2 / |log(beta*alpha/d - 1)|; requires d < beta*alpha < 2d.
double loglog_upper_coefficient(int d, double alpha, double beta);

enum class DegreeRegime { infinite_degree, heavy_tail_infinite_variance,
                          heavy_tail_finite_variance, boundary };
enum class LambdaCRegime { zero, positive_finite, infinite, boundary };
enum class DistanceRegime { bounded, loglog, polylog, linear, boundary };

struct RegimeClass {
  DegreeRegime degree = DegreeRegime::boundary;
  LambdaCRegime lambda_c = LambdaCRegime::boundary;
  DistanceRegime distance = DistanceRegime::boundary;
  bool distance_conjectured = false;  // cell only conjectured in the phase picture
  double tau = 0;                     // beta*alpha/d when degrees are finite
  double delta = 0;                   // Delta when alpha in (d,2d), else NaN
  double loglog_coefficient = 0;      // when d < beta*alpha < 2d, else NaN
  int hop_bound = 0;                  // when alpha < d, else 0
};

// Phase/distance classification for the heterogeneous model as a pure
// function of (d, alpha, beta).  Parameter values on a theorem boundary
// come back tagged boundary rather than silently assigned to a side.
RegimeClass classify_regime(int d, double alpha, double beta);

enum class HomPercolation { always, for_p_near_1, never, boundary };

// Homogeneous lattice model classification (d=1 splits at alpha=2 on
// lambda; d>=2 percolates for p close to 1 whenever alpha > d).
HomPercolation classify_hom_percolation(int d, double alpha, double lambda);

std::string to_string(DegreeRegime r);
std::string to_string(LambdaCRegime r);
std::string to_string(DistanceRegime r);
std::string to_string(HomPercolation r);

}  // namespace percolab
