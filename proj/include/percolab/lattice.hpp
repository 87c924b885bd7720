#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace percolab {

enum class Boundary { free, torus };

// Finite box {0,..,side-1}^d, row-major enumerated (last axis fastest).
struct LatticeBox {
  int d = 1;
  std::int64_t side = 2;
  Boundary boundary = Boundary::free;

  void validate() const {
    if (d < 1) throw std::invalid_argument("lattice dimension must be >= 1");
    if (side < 2) throw std::invalid_argument("lattice side must be >= 2");
    double n = 1;
    for (int k = 0; k < d; ++k) n *= double(side);
    if (n > 4.0e9) throw std::invalid_argument("lattice too large for 32-bit node ids");
  }

  std::size_t num_sites() const {
    std::size_t n = 1;
    for (int k = 0; k < d; ++k) n *= std::size_t(side);
    return n;
  }

  void coords_of(std::uint64_t index, std::int64_t* out) const {
    for (int k = d - 1; k >= 0; --k) {
      out[k] = std::int64_t(index % std::uint64_t(side));
      index /= std::uint64_t(side);
    }
  }

  std::uint64_t index_of(const std::int64_t* c) const {
    std::uint64_t idx = 0;
    for (int k = 0; k < d; ++k) idx = idx * std::uint64_t(side) + std::uint64_t(c[k]);
    return idx;
  }

  bool contains(const std::int64_t* c) const {
    for (int k = 0; k < d; ++k)
      if (c[k] < 0 || c[k] >= side) return false;
    return true;
  }

  // Squared Euclidean distance under the boundary convention.
  std::int64_t dist2(const std::int64_t* a, const std::int64_t* b) const {
    std::int64_t s = 0;
    for (int k = 0; k < d; ++k) {
      std::int64_t delta = a[k] - b[k];
      if (delta < 0) delta = -delta;
      if (boundary == Boundary::torus && delta > side - delta) delta = side - delta;
      s += delta * delta;
    }
    return s;
  }
};

inline std::string to_string(Boundary b) { return b == Boundary::free ? "free" : "torus"; }

inline Boundary boundary_from_string(const std::string& s) {
  if (s == "free") return Boundary::free;
  if (s == "torus") return Boundary::torus;
  throw std::invalid_argument("unknown boundary '" + s + "' (expected free|torus)");
}

}  // namespace percolab
