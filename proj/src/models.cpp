#include "percolab/models.hpp"

#include <charconv>
#include <cstdio>
#include <stdexcept>

namespace percolab {

namespace {

std::string fmt(double x) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

double get_num(const std::map<std::string, std::string>& kv, const std::string& key) {
  auto it = kv.find(key);
  if (it == kv.end()) throw std::invalid_argument("model config: missing key '" + key + "'");
  double x = 0;
  auto res = std::from_chars(it->second.data(), it->second.data() + it->second.size(), x);
  if (res.ec != std::errc() || res.ptr != it->second.data() + it->second.size())
    throw std::invalid_argument("model config: bad number for '" + key + "': " + it->second);
  return x;
}

double get_num_or(const std::map<std::string, std::string>& kv, const std::string& key,
                  double fallback) {
  return kv.count(key) ? get_num(kv, key) : fallback;
}

std::uint64_t get_count(const std::map<std::string, std::string>& kv, const std::string& key) {
  const double x = get_num(kv, key);
  if (x < 0 || x != std::uint64_t(x))
    throw std::invalid_argument("model config: '" + key + "' must be a non-negative integer");
  return std::uint64_t(x);
}

LatticeBox box_from(const std::map<std::string, std::string>& kv) {
  LatticeBox box;
  box.d = int(get_count(kv, "d"));
  box.side = std::int64_t(kv.count("side") ? get_count(kv, "side") : get_count(kv, "n"));
  auto it = kv.find("boundary");
  box.boundary = it == kv.end() ? Boundary::free : boundary_from_string(it->second);
  return box;
}

}  // namespace

std::string ModelSpec::model_name() const {
  struct Visitor {
    std::string operator()(const ErParams&) const { return "er"; }
    std::string operator()(const NswParams&) const { return "nsw"; }
    std::string operator()(const NnBondParams&) const { return "nn_bond"; }
    std::string operator()(const HomLrpParams&) const { return "hom_lrp"; }
    std::string operator()(const HetLrpParams&) const { return "het_lrp"; }
    std::string operator()(const ContinuumParams&) const { return "continuum"; }
    std::string operator()(const SiteBondParams&) const { return "site_bond"; }
  };
  return std::visit(Visitor{}, params);
}

void ModelSpec::validate() const {
  std::visit([](const auto& p) { p.validate(); }, params);
  if (is_lattice()) {
    if (!box) throw std::invalid_argument(model_name() + ": lattice box required");
    box->validate();
  }
}

std::map<std::string, std::string> to_key_values(const ModelSpec& spec) {
  std::map<std::string, std::string> kv;
  kv["model"] = spec.model_name();
  if (spec.box) {
    kv["d"] = std::to_string(spec.box->d);
    kv["side"] = std::to_string(spec.box->side);
    kv["boundary"] = to_string(spec.box->boundary);
  }
  if (auto* er = std::get_if<ErParams>(&spec.params)) {
    kv["n"] = std::to_string(er->n);
    kv["p"] = fmt(er->p);
  } else if (auto* nsw = std::get_if<NswParams>(&spec.params)) {
    kv["n"] = std::to_string(nsw->n);
    kv["tau"] = fmt(nsw->tau);
    kv["k_max"] = std::to_string(nsw->k_max);
  } else if (auto* nn = std::get_if<NnBondParams>(&spec.params)) {
    kv["p"] = fmt(nn->p);
  } else if (auto* hom = std::get_if<HomLrpParams>(&spec.params)) {
    kv["p"] = fmt(hom->p);
    kv["lambda"] = fmt(hom->lambda);
    kv["alpha"] = fmt(hom->alpha);
  } else if (auto* het = std::get_if<HetLrpParams>(&spec.params)) {
    kv["lambda"] = fmt(het->lambda);
    kv["alpha"] = fmt(het->alpha);
    kv["beta"] = fmt(het->beta);
  } else if (auto* cont = std::get_if<ContinuumParams>(&spec.params)) {
    kv["d"] = std::to_string(cont->d);
    kv["nu"] = fmt(cont->nu);
    kv["L"] = fmt(cont->L);
    kv["lambda"] = fmt(cont->lambda);
    kv["alpha"] = fmt(cont->alpha);
    kv["beta"] = fmt(cont->beta);
    kv["marks"] = cont->homogeneous_marks ? "unit" : "pareto";
    kv["plant_origin"] = cont->plant_origin ? "1" : "0";
  } else if (auto* sb = std::get_if<SiteBondParams>(&spec.params)) {
    kv["r_star"] = fmt(sb->r_star);
    kv["lambda"] = fmt(sb->lambda_star);
    kv["alpha"] = fmt(sb->alpha);
  }
  return kv;
}

ModelSpec model_from_key_values(const std::map<std::string, std::string>& kv) {
  auto it = kv.find("model");
  if (it == kv.end()) throw std::invalid_argument("model config: missing key 'model'");
  const std::string& name = it->second;
  ModelSpec spec;

  if (name == "er") {
    ErParams p;
    p.n = get_count(kv, "n");
    if (kv.count("p")) p.p = get_num(kv, "p");
    else p = ErParams::from_vartheta(p.n, get_num(kv, "vartheta"));
    spec.params = p;
  } else if (name == "nsw") {
    NswParams p;
    p.n = get_count(kv, "n");
    p.tau = get_num(kv, "tau");
    if (kv.count("k_max")) p.k_max = get_count(kv, "k_max");
    spec.params = p;
  } else if (name == "nn_bond") {
    spec.params = NnBondParams{get_num(kv, "p")};
    spec.box = box_from(kv);
  } else if (name == "hom_lrp") {
    HomLrpParams p;
    p.p = get_num_or(kv, "p", 0.0);
    p.lambda = get_num_or(kv, "lambda", 0.0);
    p.alpha = get_num(kv, "alpha");
    spec.params = p;
    spec.box = box_from(kv);
  } else if (name == "het_lrp") {
    HetLrpParams p;
    p.lambda = get_num(kv, "lambda");
    p.alpha = get_num(kv, "alpha");
    p.beta = get_num(kv, "beta");
    spec.params = p;
    spec.box = box_from(kv);
  } else if (name == "continuum") {
    ContinuumParams p;
    p.d = int(get_count(kv, "d"));
    p.nu = get_num(kv, "nu");
    p.L = get_num(kv, "L");
    p.lambda = get_num(kv, "lambda");
    p.alpha = get_num(kv, "alpha");
    p.beta = get_num_or(kv, "beta", 1.0);
    if (auto m = kv.find("marks"); m != kv.end()) {
      if (m->second == "unit") p.homogeneous_marks = true;
      else if (m->second == "pareto") p.homogeneous_marks = false;
      else throw std::invalid_argument("model config: marks must be unit|pareto");
    }
    p.plant_origin = get_num_or(kv, "plant_origin", 0) != 0;
    spec.params = p;
  } else if (name == "site_bond") {
    SiteBondParams p;
    p.r_star = get_num(kv, "r_star");
    p.lambda_star = get_num(kv, "lambda");
    p.alpha = get_num(kv, "alpha");
    spec.params = p;
    spec.box = box_from(kv);
  } else {
    throw std::invalid_argument("model config: unknown model '" + name + "'");
  }
  spec.validate();
  return spec;
}

}  // namespace percolab
