#pragma once

#include <cmath>
#include <cstdint>

namespace percolab {

// Counter-based random stream built on the splitmix64 finalizer.
//
// Output i of a stream is a pure function of (seed, stream, i), so the same
// value can be drawn sequentially (next_*) or by direct index (*_at).  Random
// access is what lets OpenMP kernels produce bit-identical output to the
// serial reference: every pair/site owns a fixed counter slot regardless of
// the thread that evaluates it.
class RngStream {
 public:
  RngStream(std::uint64_t seed, std::uint64_t stream)
      : base_(mix(mix(seed + kGolden), stream)) {}

  // Independent substream; used to separate purposes (edges, weights, ...).
  RngStream fork(std::uint64_t tag) const {
    RngStream r(*this);
    r.base_ = mix(mix(base_ ^ 0x5851f42d4c957f2dULL), tag);
    r.counter_ = 0;
    return r;
  }

  std::uint64_t bits_at(std::uint64_t i) const {
    return finalize(base_ + (i + 1) * kGolden);
  }
  // Uniform on [0,1).
  double uniform_at(std::uint64_t i) const {
    return static_cast<double>(bits_at(i) >> 11) * 0x1.0p-53;
  }
  // Uniform on (0,1]; safe as a log/pow argument.
  double uniform_pos_at(std::uint64_t i) const {
    return static_cast<double>((bits_at(i) >> 11) + 1) * 0x1.0p-53;
  }

  std::uint64_t next_bits() { return bits_at(counter_++); }
  double next_uniform() { return uniform_at(counter_++); }
  double next_uniform_pos() { return uniform_pos_at(counter_++); }

  // Unbiased integer in [0, n); rejection on the top remainder band.
  std::uint64_t next_below(std::uint64_t n) {
    const std::uint64_t threshold = (-n) % n;  // 2^64 mod n
    for (;;) {
      const std::uint64_t r = next_bits();
      if (r >= threshold) return r % n;
    }
  }

  // Poisson count by accumulating exponential arrivals; exact, O(mean).
  std::uint64_t next_poisson(double mean) {
    double s = 0.0;
    std::uint64_t k = 0;
    for (;;) {
      s += -std::log(next_uniform_pos());
      if (s >= mean) return k;
      ++k;
    }
  }

  std::uint64_t state() const { return base_; }

 private:
  static constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

  static constexpr std::uint64_t finalize(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  static constexpr std::uint64_t mix(std::uint64_t h, std::uint64_t v = 0) {
    return finalize(h + kGolden * (v + 1));
  }

  std::uint64_t base_;
  std::uint64_t counter_ = 0;
};

// Substream tags shared by the generators so that coupled runs (e.g. the
// same edge uniforms under different weights) line up exactly.
namespace rng_tag {
inline constexpr std::uint64_t edges = 1;
inline constexpr std::uint64_t weights = 2;
inline constexpr std::uint64_t points = 3;
inline constexpr std::uint64_t degrees = 4;
inline constexpr std::uint64_t matching = 5;
inline constexpr std::uint64_t occupation = 6;
}  // namespace rng_tag

}  // namespace percolab
