#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace percolab {

// Finite degree distribution (g_0, ..., g_kmax).
struct DegreeLaw {
  std::vector<double> weights;

  std::size_t k_max() const { return weights.empty() ? 0 : weights.size() - 1; }

  void validate(double tol = 1e-12) const {
    double sum = 0;
    for (double w : weights) {
      if (w < 0) throw std::invalid_argument("degree law: negative weight");
      sum += w;
    }
    if (sum < 1 - tol || sum > 1 + tol)
      throw std::invalid_argument("degree law: weights do not sum to 1");
  }
};

// Poisson(theta) truncated to 0..k_max and renormalised.
DegreeLaw truncated_poisson(double theta, std::size_t k_max);

// Inverse-CDF sampler over a DegreeLaw (binary search on the cumulative).
class DegreeSampler {
 public:
  explicit DegreeSampler(const DegreeLaw& law);
  std::uint32_t sample(double u) const;  // u in [0,1)

 private:
  std::vector<double> cdf_;
};

}  // namespace percolab
