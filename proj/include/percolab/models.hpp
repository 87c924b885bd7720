#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>

#include "percolab/lattice.hpp"

namespace percolab {

// Parameter sets for the seven model families.

struct ErParams {
  std::uint64_t n = 0;
  double p = 0;  // in (0,1)

  static ErParams from_vartheta(std::uint64_t n, double vartheta) {
    return ErParams{n, vartheta / double(n)};
  }
  void validate() const {
    if (n < 1) throw std::invalid_argument("er: n must be >= 1");
    if (!(p > 0 && p < 1)) throw std::invalid_argument("er: p must lie in (0,1)");
  }
};

struct NswParams {
  std::uint64_t n = 0;
  double tau = 0;             // tail parameter > 0
  std::uint64_t k_max = 1000000;

  void validate() const {
    if (!(tau > 0)) throw std::invalid_argument("nsw: tau must be > 0");
    if (k_max < 1) throw std::invalid_argument("nsw: k_max must be >= 1");
  }
};

struct NnBondParams {
  double p = 0;  // in [0,1]

  void validate() const {
    if (!(p >= 0 && p <= 1)) throw std::invalid_argument("nn_bond: p must lie in [0,1]");
  }
};

struct HomLrpParams {
  double p = 0;       // nearest-neighbour probability in [0,1]
  double lambda = 0;  // >= 0 (0 shuts off long-range edges)
  double alpha = 1;   // > 0

  void validate() const {
    if (!(p >= 0 && p <= 1)) throw std::invalid_argument("hom_lrp: p must lie in [0,1]");
    if (!(lambda >= 0)) throw std::invalid_argument("hom_lrp: lambda must be >= 0");
    if (!(alpha > 0)) throw std::invalid_argument("hom_lrp: alpha must be > 0");
  }
};

struct HetLrpParams {
  double lambda = 0;  // > 0
  double alpha = 1;   // > 0
  double beta = 1;    // Pareto tail > 0

  void validate() const {
    if (!(lambda > 0)) throw std::invalid_argument("het_lrp: lambda must be > 0");
    if (!(alpha > 0)) throw std::invalid_argument("het_lrp: alpha must be > 0");
    if (!(beta > 0)) throw std::invalid_argument("het_lrp: beta must be > 0");
  }
};

struct ContinuumParams {
  int d = 1;
  double nu = 1;  // intensity per unit volume, > 0
  double L = 1;   // box side, > 0; box is [-L/2, L/2]^d
  double lambda = 1;
  double alpha = 1;
  double beta = 1;
  bool homogeneous_marks = false;  // force W == 1
  bool plant_origin = false;       // extra particle at 0 (node id 0)

  void validate() const {
    if (d < 1) throw std::invalid_argument("continuum: d must be >= 1");
    if (!(nu > 0)) throw std::invalid_argument("continuum: nu must be > 0");
    if (!(L > 0)) throw std::invalid_argument("continuum: L must be > 0");
    if (!(lambda > 0)) throw std::invalid_argument("continuum: lambda must be > 0");
    if (!(alpha > 0)) throw std::invalid_argument("continuum: alpha must be > 0");
    if (!(beta > 0)) throw std::invalid_argument("continuum: beta must be > 0");
  }
};

struct SiteBondParams {
  double r_star = 0;       // site occupation probability in [0,1]
  double lambda_star = 1;  // > 0
  double alpha = 1;        // > 0

  void validate() const {
    if (!(r_star >= 0 && r_star <= 1))
      throw std::invalid_argument("site_bond: r_star must lie in [0,1]");
    if (!(lambda_star > 0)) throw std::invalid_argument("site_bond: lambda_star must be > 0");
    if (!(alpha > 0)) throw std::invalid_argument("site_bond: alpha must be > 0");
  }
};

using ModelParams = std::variant<ErParams, NswParams, NnBondParams, HomLrpParams, HetLrpParams,
                                 ContinuumParams, SiteBondParams>;

// A fully specified model: parameters plus, for lattice families, the box.
struct ModelSpec {
  ModelParams params;
  std::optional<LatticeBox> box;

  bool is_lattice() const {
    return std::holds_alternative<NnBondParams>(params) ||
           std::holds_alternative<HomLrpParams>(params) ||
           std::holds_alternative<HetLrpParams>(params) ||
           std::holds_alternative<SiteBondParams>(params);
  }
  std::string model_name() const;
  void validate() const;
};

// Flat key-value serialisation (keys: model, d, n, side, p, lambda, alpha,
// beta, nu, tau, k_max, r_star, boundary, L, marks, plant_origin).
std::map<std::string, std::string> to_key_values(const ModelSpec& spec);
ModelSpec model_from_key_values(const std::map<std::string, std::string>& kv);

}  // namespace percolab
