#include "percolab/degree_law.hpp"

#include <algorithm>
#include <cmath>

namespace percolab {

DegreeLaw truncated_poisson(double theta, std::size_t k_max) {
  if (!(theta > 0)) throw std::invalid_argument("truncated_poisson: theta must be > 0");
  DegreeLaw law;
  law.weights.resize(k_max + 1);
  double log_w = -theta;  // log pmf at k=0
  double sum = 0;
  for (std::size_t k = 0; k <= k_max; ++k) {
    if (k > 0) log_w += std::log(theta) - std::log(double(k));
    law.weights[k] = std::exp(log_w);
    sum += law.weights[k];
  }
  for (auto& w : law.weights) w /= sum;
  return law;
}

DegreeSampler::DegreeSampler(const DegreeLaw& law) {
  law.validate();
  cdf_.resize(law.weights.size());
  double acc = 0;
  for (std::size_t k = 0; k < law.weights.size(); ++k) {
    acc += law.weights[k];
    cdf_[k] = acc;
  }
  cdf_.back() = 1.0;
}

std::uint32_t DegreeSampler::sample(double u) const {
  const auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
  return std::uint32_t(it - cdf_.begin());
}

}  // namespace percolab
