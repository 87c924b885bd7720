#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "percolab/generators.hpp"
#include "percolab/theory.hpp"

using namespace percolab;

namespace {

DegreeLaw law_from(std::initializer_list<double> weights) {
  DegreeLaw law;
  law.weights = weights;
  return law;
}

// five-point stencil derivative, O(h^4)
double derivative(const DegreeLaw& law, double z, double h = 1e-3) {
  return (-pgf_g0(law, z + 2 * h) + 8 * pgf_g0(law, z + h) - 8 * pgf_g0(law, z - h) +
          pgf_g0(law, z - 2 * h)) /
         (12 * h);
}

}  // namespace

TEST_CASE("pgf normalisation and closed forms") {
  const auto poisson = truncated_poisson(2.0, 200);
  CHECK(pgf_g0(poisson, 1.0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(pgf_g1(poisson, 1.0) == doctest::Approx(1.0).epsilon(1e-12));

  const auto det2 = law_from({0, 0, 1});  // deterministic degree 2
  for (double z : {0.0, 0.3, 0.7, 1.0}) {
    CHECK(pgf_g0(det2, z) == doctest::Approx(z * z));
    CHECK(pgf_g1(det2, z) == doctest::Approx(z));
  }
}

TEST_CASE("G0' = mu * G1 via finite differences") {
  const auto poisson = truncated_poisson(2.0, 200);
  const double mu = mean_degree(poisson);
  for (double z = 0.1; z < 0.95; z += 0.1)
    CHECK(std::abs(derivative(poisson, z) - mu * pgf_g1(poisson, z)) < 1e-10);

  const auto nsw = nsw_degree_law(NswParams{0, 2.5, 1000});
  const double mu2 = mean_degree(nsw);
  for (double z = 0.1; z < 0.95; z += 0.1)
    CHECK(std::abs(derivative(nsw, z) - mu2 * pgf_g1(nsw, z)) < 1e-10);
}

TEST_CASE("pgf_g1 rejects zero mean") {
  const auto zero = law_from({1.0});
  CHECK_THROWS_AS(pgf_g1(zero, 0.5), std::invalid_argument);
}

TEST_CASE("second generation mean") {
  CHECK(second_gen_mean(law_from({0, 0, 1})) == doctest::Approx(1.0));  // (2-1)*2*1/2
  // E[D(D-1)]/E[D] identity for Poisson
  CHECK(second_gen_mean(truncated_poisson(2.0, 200)) == doctest::Approx(2.0).epsilon(1e-6));
}

TEST_CASE("tau=1.5 power law: vartheta grows without bound in the cutoff") {
  double prev = 0;
  for (std::uint64_t k_max : {100ull, 1000ull, 10000ull, 100000ull}) {
    const double theta = second_gen_mean(nsw_degree_law(NswParams{0, 1.5, k_max}));
    CHECK(theta > prev);
    prev = theta;
  }
  // sum k^{-1/2} ~ 2 sqrt(k_max): two decades of cutoff should give ~10x
  CHECK(prev > 5 * second_gen_mean(nsw_degree_law(NswParams{0, 1.5, 1000})));
}

TEST_CASE("giant fraction: subcritical Poisson") {
  const auto report = giant_fraction(truncated_poisson(0.5, 200));
  CHECK(report.vartheta == doctest::Approx(0.5).epsilon(1e-6));
  CHECK(report.chi == 0.0);
  CHECK(report.z0 == 1.0);
  CHECK(report.regime == "subcritical");
}

TEST_CASE("giant fraction: Poisson(2) matches the fixed-point oracle") {
  // oracle: iterate z <- exp(2(z-1)) directly
  double z = 0;
  for (int i = 0; i < 200000; ++i) {
    const double next = std::exp(2 * (z - 1));
    if (std::abs(next - z) < 1e-15) break;
    z = next;
  }
  const auto report = giant_fraction(truncated_poisson(2.0, 200));
  CHECK(report.converged);
  CHECK(report.z0 == doctest::Approx(z).epsilon(1e-9));
  CHECK(report.chi == doctest::Approx(1 - z).epsilon(1e-9));
  CHECK(report.chi == doctest::Approx(0.7968121300).epsilon(1e-7));
  CHECK(report.regime == "supercritical");
}

TEST_CASE("giant fraction: g1 = g3 = 1/2") {
  // G1(z) = (1+3z^2)/4; smallest root of 3z^2-4z+1: z0 = 1/3
  // (the paper's vartheta formula gives (1/mu) sum (k-1)k g_k = 3/2)
  const auto report = giant_fraction(law_from({0, 0.5, 0, 0.5}));
  CHECK(report.vartheta == doctest::Approx(1.5));
  CHECK(report.z0 == doctest::Approx(1.0 / 3).epsilon(1e-10));
  CHECK(report.chi == doctest::Approx(22.0 / 27).epsilon(1e-10));
}

TEST_CASE("chi > 0 iff vartheta > 1 across a parameter sweep") {
  for (double theta : {0.3, 0.6, 0.9, 0.999, 1.001, 1.2, 2.0, 4.0}) {
    const auto report = giant_fraction(truncated_poisson(theta, 400));
    CHECK((report.chi > 0) == (report.vartheta > 1));
  }
  for (double tau : {1.2, 1.8, 2.2, 3.0, 4.0}) {
    const auto report = giant_fraction(nsw_degree_law(NswParams{0, tau, 2000}));
    CHECK((report.chi > 0) == (report.vartheta > 1));
  }
}

TEST_CASE("G0 and G1 are non-decreasing and convex on [0,1]") {
  const std::vector<DegreeLaw> laws = {truncated_poisson(2.0, 100),
                                       nsw_degree_law(NswParams{0, 1.5, 500}),
                                       law_from({0.2, 0.3, 0.1, 0.4})};
  for (const auto& law : laws) {
    double prev0 = -1, prev1 = -1, prev_d0 = -1, prev_d1 = -1;
    for (double z = 0; z <= 1.0001; z += 0.05) {
      const double zz = std::min(z, 1.0);
      const double g0 = pgf_g0(law, zz), g1 = pgf_g1(law, zz);
      CHECK(g0 >= prev0 - 1e-12);
      CHECK(g1 >= prev1 - 1e-12);
      if (prev0 >= 0) {
        const double d0 = g0 - prev0, d1 = g1 - prev1;
        CHECK(d0 >= prev_d0 - 1e-9);  // increments grow: convexity
        CHECK(d1 >= prev_d1 - 1e-9);
        prev_d0 = d0;
        prev_d1 = d1;
      }
      prev0 = g0;
      prev1 = g1;
    }
  }
}

TEST_CASE("distance exponent") {
  CHECK(distance_exponent(2, 2.5) == doctest::Approx(1.4747698474).epsilon(1e-9));
  CHECK(std::pow(std::log(1e4), distance_exponent(2, 2.5)) ==
        doctest::Approx(26.4292).epsilon(1e-4));
  CHECK(distance_exponent(1, 1.5) == doctest::Approx(2.4094208397).epsilon(1e-9));
  CHECK(distance_exponent(2, 2.0000001) == doctest::Approx(1.0).epsilon(1e-6));
  CHECK_THROWS_AS(distance_exponent(2, 2.0), std::invalid_argument);
  CHECK_THROWS_AS(distance_exponent(2, 4.0), std::invalid_argument);
  // strictly increasing in alpha on (d, 2d)
  double prev = 0;
  for (double alpha = 2.1; alpha < 4.0; alpha += 0.1) {
    const double delta = distance_exponent(2, alpha);
    CHECK(delta > prev);
    prev = delta;
  }
}

TEST_CASE("benjamini bound") {
  CHECK(benjamini_bound(2, 1.0) == 2);
  CHECK(benjamini_bound(3, 2.0) == 3);
  CHECK(benjamini_bound(2, 1.9) == 20);
  CHECK_THROWS_AS(benjamini_bound(2, 2.0), std::invalid_argument);
  CHECK_THROWS_AS(benjamini_bound(2, 2.5), std::invalid_argument);
}

TEST_CASE("loglog upper coefficient") {
  CHECK(loglog_upper_coefficient(1, 1.5, 1.0) == doctest::Approx(2.8853900818).epsilon(1e-9));
  // depends only on beta*alpha/d
  CHECK(loglog_upper_coefficient(2, 2.0, 1.5) == doctest::Approx(2.8853900818).epsilon(1e-9));
  // diverges as beta*alpha/d -> 2
  CHECK(loglog_upper_coefficient(1, 1.999, 1.0) > 1000);
  CHECK_THROWS_AS(loglog_upper_coefficient(1, 2.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(loglog_upper_coefficient(1, 0.9, 1.0), std::invalid_argument);
}

TEST_CASE("regime classification: spec cells") {
  {
    const auto rc = classify_regime(1, 1.5, 1.0);  // beta*alpha = 1.5 in (1,2)
    CHECK(rc.lambda_c == LambdaCRegime::zero);
    CHECK(rc.distance == DistanceRegime::loglog);
    CHECK(rc.degree == DegreeRegime::heavy_tail_infinite_variance);
    CHECK(rc.tau == doctest::Approx(1.5));
  }
  {
    const auto rc = classify_regime(1, 3.0, 1.0);  // min(alpha, beta*alpha) = 3 > 2
    CHECK(rc.lambda_c == LambdaCRegime::infinite);
    CHECK(rc.distance == DistanceRegime::linear);
  }
  {
    const auto rc = classify_regime(2, 3.0, 2.0);  // beta*alpha = 6 > 4, alpha in (2,4)
    CHECK(rc.lambda_c == LambdaCRegime::positive_finite);
    CHECK(rc.distance == DistanceRegime::polylog);
    CHECK(rc.delta == doctest::Approx(distance_exponent(2, 3.0)));
    CHECK(rc.degree == DegreeRegime::heavy_tail_finite_variance);
  }
  {
    const auto rc = classify_regime(2, 1.0, 5.0);  // alpha < d
    CHECK(rc.degree == DegreeRegime::infinite_degree);
    CHECK(rc.lambda_c == LambdaCRegime::zero);
    CHECK(rc.distance == DistanceRegime::bounded);
    CHECK_FALSE(rc.distance_conjectured);
    CHECK(rc.hop_bound == 2);
  }
  {
    const auto rc = classify_regime(2, 3.0, 0.25);  // alpha > d but beta*alpha < d
    CHECK(rc.degree == DegreeRegime::infinite_degree);
    CHECK(rc.distance == DistanceRegime::bounded);
    CHECK(rc.distance_conjectured);
  }
}

TEST_CASE("regime classification: boundaries reported, not resolved") {
  CHECK(classify_regime(1, 2.0, 1.5).lambda_c == LambdaCRegime::boundary);  // alpha = 2d
  CHECK(classify_regime(1, 1.0, 1.5).degree == DegreeRegime::boundary);     // alpha = d
  CHECK(classify_regime(2, 2.5, 1.6).lambda_c == LambdaCRegime::boundary);  // beta*alpha = 2d
  CHECK(classify_regime(2, 2.5, 0.8).degree == DegreeRegime::boundary);     // beta*alpha = d
}

TEST_CASE("classification is monotone in beta: lambda_c never moves positive -> zero") {
  for (int d : {1, 2, 3}) {
    for (double alpha = 0.3; alpha < 4.0 * d; alpha += 0.37) {
      int rank_prev = -1;  // zero=0 < positive_finite=1 <= infinite=2
      for (double beta = 0.11; beta < 6; beta += 0.23) {
        const auto rc = classify_regime(d, alpha, beta);
        if (rc.lambda_c == LambdaCRegime::boundary) continue;
        const int rank = rc.lambda_c == LambdaCRegime::zero ? 0
                         : rc.lambda_c == LambdaCRegime::positive_finite ? 1 : 2;
        CHECK(rank >= rank_prev);
        rank_prev = rank;
      }
    }
  }
}

TEST_CASE("homogeneous d=1 classifier encodes the alpha=2 lambda split") {
  CHECK(classify_hom_percolation(1, 2.0, 1.5) == HomPercolation::for_p_near_1);
  CHECK(classify_hom_percolation(1, 2.0, 1.0) == HomPercolation::never);
  CHECK(classify_hom_percolation(1, 2.0, 0.5) == HomPercolation::never);
  CHECK(classify_hom_percolation(1, 1.5, 1.0) == HomPercolation::for_p_near_1);
  CHECK(classify_hom_percolation(1, 3.0, 5.0) == HomPercolation::never);
  CHECK(classify_hom_percolation(1, 0.5, 1.0) == HomPercolation::always);
  CHECK(classify_hom_percolation(2, 3.0, 1.0) == HomPercolation::for_p_near_1);
  CHECK(classify_hom_percolation(2, 1.5, 1.0) == HomPercolation::always);
  CHECK(classify_hom_percolation(2, 2.0, 1.0) == HomPercolation::boundary);
}

TEST_CASE("nsw degree law: normalisation and mean") {
  // k_max = 1 concentrates on degree 1
  const auto single = nsw_degree_law(NswParams{0, 1.5, 1});
  CHECK(single.weights[0] == 0.0);
  CHECK(single.weights[1] == doctest::Approx(1.0));

  const auto law = nsw_degree_law(NswParams{0, 1.5, 1000000});
  double sum = 0;
  for (double w : law.weights) sum += w;
  CHECK(sum == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(law.weights[0] == 0.0);

  // high-precision series oracle for tau=2.5, k_max=1e4
  const auto law25 = nsw_degree_law(NswParams{0, 2.5, 10000});
  CHECK(std::abs(mean_degree(law25) - 1.1905975577677204) < 1e-10);

  CHECK_THROWS_AS(nsw_degree_law(NswParams{0, 2.5, 0}), std::invalid_argument);
}
