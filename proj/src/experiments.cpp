#include "percolab/experiments.hpp"

#include <omp.h>

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "percolab/clustering.hpp"
#include "percolab/distance.hpp"

namespace percolab {

namespace {

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::uint64_t parse_u64(const std::string& s, const std::string& key) {
  std::uint64_t v = 0;
  auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size())
    throw std::invalid_argument("sweep config: bad integer for '" + key + "': " + s);
  return v;
}

std::string fmt_double(double x) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

void write_file_atomic(const std::string& path, const std::string& body) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream os(tmp, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open '" + tmp + "' for writing");
    os.write(body.data(), std::streamsize(body.size()));
    if (!os) {
      os.close();
      std::remove(tmp.c_str());
      throw std::runtime_error("failed while writing '" + tmp + "'");
    }
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    std::remove(tmp.c_str());
    throw std::runtime_error("cannot rename '" + tmp + "' to '" + path + "'");
  }
}

}  // namespace

SweepConfig parse_sweep_config(const std::string& text) {
  SweepConfig cfg;
  std::stringstream ss(text);
  std::string line;
  while (std::getline(ss, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("sweep config: expected 'key = value': " + line);
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.rfind("grid.", 0) == 0) {
      cfg.grid[key.substr(5)] = split_list(value);
    } else if (key == "replicates") {
      cfg.replicates = parse_u64(value, key);
    } else if (key == "seed") {
      cfg.seed = parse_u64(value, key);
    } else if (key == "observables") {
      cfg.observables = split_list(value);
    } else if (key == "out") {
      cfg.out = value;
    } else if (key == "record_walltime") {
      cfg.record_walltime = value != "0" && value != "false";
    } else if (key == "threads") {
      cfg.threads = int(parse_u64(value, key));
    } else {
      cfg.base[key] = value;
    }
  }
  if (cfg.replicates < 1) throw std::invalid_argument("sweep config: replicates must be >= 1");
  if (cfg.observables.empty())
    throw std::invalid_argument("sweep config: at least one observable required");
  for (const auto& [param, values] : cfg.grid)
    if (values.empty())
      throw std::invalid_argument("sweep config: empty grid for '" + param + "'");
  return cfg;
}

SweepConfig load_sweep_config(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot open sweep config '" + path + "'");
  std::stringstream ss;
  ss << is.rdbuf();
  return parse_sweep_config(ss.str());
}

const std::vector<std::string>& known_observables() {
  static const std::vector<std::string> names = {
      "num_edges",        "mean_degree",   "max_degree",     "largest_component_size",
      "largest_component_fraction", "num_components", "clustering",
      "self_loops",       "parallel_edges", "crossing"};
  return names;
}

namespace {

double evaluate_observable(const std::string& name, const ModelSpec& spec, const Graph& g,
                           const ComponentLabeling& labeling) {
  if (name == "num_edges") return double(g.num_edges());
  if (name == "mean_degree")
    return g.num_nodes ? 2.0 * double(g.num_edges()) / double(g.num_nodes) : 0.0;
  if (name == "max_degree") {
    std::size_t m = 0;
    for (NodeId v = 0; v < g.num_nodes; ++v) m = std::max(m, g.degree(v));
    return double(m);
  }
  if (name == "largest_component_size") return double(labeling.largest_size());
  if (name == "largest_component_fraction")
    return g.num_nodes ? double(labeling.largest_size()) / double(g.num_nodes) : 0.0;
  if (name == "num_components") return double(labeling.count());
  if (name == "clustering") return clustering_coefficient(g);
  if (name == "self_loops") {
    Graph copy = g;
    return double(simplify(copy).self_loops);
  }
  if (name == "parallel_edges") {
    Graph copy = g;
    return double(simplify(copy).parallel_edges);
  }
  if (name == "crossing") {
    if (!spec.box) throw std::invalid_argument("observable 'crossing' needs a lattice model");
    return spans_box(g, *spec.box, labeling) ? 1.0 : 0.0;
  }
  throw std::invalid_argument("unknown observable '" + name + "'");
}

}  // namespace

std::string records_to_csv(const std::vector<ResultRecord>& records) {
  std::set<std::string> param_keys;
  for (const auto& r : records)
    for (const auto& [k, v] : r.params) param_keys.insert(k);

  std::string csv;
  for (const auto& k : param_keys) csv += k + ",";
  csv += "seed,stream,observable,value,walltime_ms,error\n";
  for (const auto& r : records) {
    for (const auto& k : param_keys) {
      auto it = r.params.find(k);
      if (it != r.params.end()) csv += it->second;
      csv += ',';
    }
    csv += std::to_string(r.seed) + ',' + std::to_string(r.stream) + ',' + r.observable + ',';
    if (r.value) csv += fmt_double(*r.value);
    csv += ',';
    if (r.walltime_ms) csv += fmt_double(*r.walltime_ms);
    csv += ',';
    csv += r.error;
    csv += '\n';
  }
  return csv;
}

SweepResult run_sweep(const SweepConfig& config) {
  if (config.threads > 0) omp_set_num_threads(config.threads);

  // cartesian grid in lexicographic key order
  std::vector<std::string> grid_keys;
  std::vector<std::vector<std::string>> grid_values;
  for (const auto& [k, vs] : config.grid) {
    grid_keys.push_back(k);
    grid_values.push_back(vs);
  }
  std::size_t num_points = 1;
  for (const auto& vs : grid_values) num_points *= vs.size();

  struct Task {
    std::size_t grid_index;
    std::uint64_t replicate;
    std::map<std::string, std::string> params;
  };
  std::vector<Task> tasks;
  tasks.reserve(num_points * config.replicates);
  for (std::size_t gi = 0; gi < num_points; ++gi) {
    auto kv = config.base;
    std::size_t rest = gi;
    for (std::size_t k = 0; k < grid_keys.size(); ++k) {
      const auto& vs = grid_values[k];
      kv[grid_keys[k]] = vs[rest % vs.size()];
      rest /= vs.size();
    }
    for (std::uint64_t rep = 0; rep < config.replicates; ++rep)
      tasks.push_back(Task{gi, rep, kv});
  }

  const std::size_t obs_n = config.observables.size();
  std::vector<ResultRecord> records(tasks.size() * obs_n);

#pragma omp parallel for schedule(dynamic)
  for (std::int64_t ti = 0; ti < std::int64_t(tasks.size()); ++ti) {
    const Task& task = tasks[std::size_t(ti)];
    // unique deterministic stream per (grid point, replicate)
    const std::uint64_t stream = RngStream(task.grid_index, task.replicate).state();
    const auto t0 = std::chrono::steady_clock::now();

    std::vector<ResultRecord> rows(obs_n);
    for (std::size_t oi = 0; oi < obs_n; ++oi) {
      rows[oi].params = task.params;
      rows[oi].seed = config.seed;
      rows[oi].stream = stream;
      rows[oi].observable = config.observables[oi];
    }
    try {
      const ModelSpec spec = model_from_key_values(task.params);
      const Graph g = sample_model(spec, RngStream(config.seed, stream), Exec::serial);
      const ComponentLabeling labeling = components(g);
      for (std::size_t oi = 0; oi < obs_n; ++oi)
        rows[oi].value = evaluate_observable(config.observables[oi], spec, g, labeling);
    } catch (const std::exception& e) {
      for (std::size_t oi = 0; oi < obs_n; ++oi) rows[oi].error = e.what();
    }
    if (config.record_walltime) {
      const auto ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - t0).count();
      for (std::size_t oi = 0; oi < obs_n; ++oi) rows[oi].walltime_ms = ms;
    }
    for (std::size_t oi = 0; oi < obs_n; ++oi)
      records[std::size_t(ti) * obs_n + oi] = std::move(rows[oi]);
  }

  SweepResult result;
  result.records = std::move(records);

  if (!config.out.empty()) {
    result.csv_path = config.out + ".csv";
    write_file_atomic(result.csv_path, records_to_csv(result.records));

    nlohmann::json summary;
    summary["config"]["seed"] = config.seed;
    summary["config"]["replicates"] = config.replicates;
    summary["config"]["observables"] = config.observables;
    for (const auto& [k, v] : config.base) summary["config"]["base"][k] = v;
    for (const auto& [k, vs] : config.grid) summary["config"]["grid"][k] = vs;
    summary["grid_points"] = num_points;
    summary["rows"] = result.records.size();

    std::map<std::string, std::vector<double>> by_obs;
    std::size_t failures = 0;
    for (const auto& r : result.records) {
      if (r.value) by_obs[r.observable].push_back(*r.value);
      else ++failures;
    }
    summary["na_rows"] = failures;
    for (auto& [name, vs] : by_obs) {
      double mean = 0;
      for (double v : vs) mean += v;
      mean /= double(vs.size());
      summary["aggregate"][name]["count"] = vs.size();
      summary["aggregate"][name]["mean"] = mean;
      summary["aggregate"][name]["min"] = *std::min_element(vs.begin(), vs.end());
      summary["aggregate"][name]["max"] = *std::max_element(vs.begin(), vs.end());
    }
    result.summary_path = config.out + ".summary.json";
    write_file_atomic(result.summary_path, summary.dump(2) + "\n");
  }
  return result;
}

// ------------------------------------------------------------------

Trend crossing_trend(const std::vector<CrossingEstimate>& by_size) {
  int positive = 0, negative = 0;
  for (std::size_t i = 0; i < by_size.size(); ++i) {
    for (std::size_t j = i + 1; j < by_size.size(); ++j) {
      // Agresti-Coull smoothed two-proportion z
      const auto& a = by_size[i];
      const auto& b = by_size[j];
      const double pa = (double(a.hits) + 2) / (double(a.replicates) + 4);
      const double pb = (double(b.hits) + 2) / (double(b.replicates) + 4);
      const double var = pa * (1 - pa) / (double(a.replicates) + 4) +
                         pb * (1 - pb) / (double(b.replicates) + 4);
      const double z = (pb - pa) / std::sqrt(var);
      if (z > 1.959963984540054) ++positive;
      if (z < -1.959963984540054) ++negative;
    }
  }
  if (positive > 0 && negative == 0) return Trend::increasing;
  if (negative > 0 && positive == 0) return Trend::decreasing;
  return Trend::flat;
}

namespace {

enum class Probe { super, sub, ambiguous };

Probe probe_lambda(const std::vector<CrossingEstimate>& by_size, Trend trend) {
  if (trend == Trend::increasing) return Probe::super;
  if (trend == Trend::decreasing) return Probe::sub;
  double min_low = 1, max_high = 0;
  for (const auto& e : by_size) {
    min_low = std::min(min_low, e.ci_low);
    max_high = std::max(max_high, e.ci_high);
  }
  if (min_low > 0.5) return Probe::super;  // solidly crossing at every size
  if (max_high < 0.5) return Probe::sub;   // solidly not crossing at every size
  return Probe::ambiguous;
}

}  // namespace

PhaseDiagram phase_diagram(int d, const std::vector<double>& alpha_grid,
                           const std::vector<double>& beta_grid,
                           const std::vector<double>& lambda_grid,
                           const std::vector<std::int64_t>& sides, std::uint64_t replicates,
                           RngStream rng) {
  if (lambda_grid.empty() || sides.empty() || alpha_grid.empty() || beta_grid.empty())
    throw std::invalid_argument("phase_diagram: empty grid");
  auto lambdas = lambda_grid;
  std::sort(lambdas.begin(), lambdas.end());

  PhaseDiagram diagram;
  diagram.d = d;
  diagram.lambdas = lambdas;
  diagram.sides = sides;

  std::size_t cell_index = 0;
  for (double alpha : alpha_grid) {
    for (double beta : beta_grid) {
      PhaseCell cell;
      cell.alpha = alpha;
      cell.beta = beta;
      const RegimeClass rc = classify_regime(d, alpha, beta);
      cell.predicted = rc.lambda_c;
      cell.boundary = rc.lambda_c == LambdaCRegime::boundary;

      cell.estimates.resize(lambdas.size());
      cell.trends.resize(lambdas.size());
      for (std::size_t li = 0; li < lambdas.size(); ++li) {
        for (std::size_t si = 0; si < sides.size(); ++si) {
          ModelSpec spec;
          spec.params = HetLrpParams{lambdas[li], alpha, beta};
          spec.box = LatticeBox{d, sides[si], Boundary::free};
          // stream independent of lambda: shared uniforms couple the lambdas
          RngStream cell_rng = rng.fork((std::uint64_t(cell_index) << 16) | si);
          cell.estimates[li].push_back(crossing_probability(spec, replicates, cell_rng));
        }
        cell.trends[li] = crossing_trend(cell.estimates[li]);
      }

      const Probe low = probe_lambda(cell.estimates.front(), cell.trends.front());
      const Probe high = probe_lambda(cell.estimates.back(), cell.trends.back());
      if (low == Probe::super) cell.signature = LambdaSignature::zero;
      else if (high == Probe::sub) cell.signature = LambdaSignature::infinite;
      else if (low == Probe::sub && high == Probe::super)
        cell.signature = LambdaSignature::positive_finite;
      else cell.signature = LambdaSignature::ambiguous;

      cell.agrees =
          !cell.boundary &&
          ((cell.signature == LambdaSignature::zero && cell.predicted == LambdaCRegime::zero) ||
           (cell.signature == LambdaSignature::positive_finite &&
            cell.predicted == LambdaCRegime::positive_finite) ||
           (cell.signature == LambdaSignature::infinite &&
            cell.predicted == LambdaCRegime::infinite));
      diagram.cells.push_back(std::move(cell));
      ++cell_index;
    }
  }
  return diagram;
}

// ------------------------------------------------------------------

namespace {

// leave-one-out residual sum for the affine fit median ~ a + b * f(r)
double loro_rss(const std::vector<double>& f, const std::vector<double>& y) {
  const std::size_t n = f.size();
  double rss = 0;
  for (std::size_t leave = 0; leave < n; ++leave) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    double m = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == leave) continue;
      sx += f[i];
      sy += y[i];
      sxx += f[i] * f[i];
      sxy += f[i] * y[i];
      ++m;
    }
    const double denom = m * sxx - sx * sx;
    const double b = denom != 0 ? (m * sxy - sx * sy) / denom : 0;
    const double a = (sy - b * sx) / m;
    const double err = y[leave] - (a + b * f[leave]);
    rss += err * err;
  }
  return rss;
}

}  // namespace

GrowthFitReport fit_growth_law(const DistanceCell& cell, const std::vector<double>& radii,
                               std::size_t pairs_per_radius, std::uint64_t replicates,
                               RngStream rng, bool fast) {
  if (radii.size() < 3) throw std::invalid_argument("fit_growth_law: need at least 3 radii");
  GrowthFitReport report;
  report.label = cell.label;
  report.delta_used = cell.delta;

  // pool hops over replicates
  std::vector<RadiusProfile> pooled(radii.size());
  for (std::size_t ri = 0; ri < radii.size(); ++ri) pooled[ri].radius = radii[ri];
  for (std::uint64_t rep = 0; rep < replicates; ++rep) {
    const auto profile =
        chemical_distance_profile(cell.spec, radii, pairs_per_radius, rng.fork(rep),
                                  Exec::parallel, fast);
    for (std::size_t ri = 0; ri < radii.size(); ++ri)
      pooled[ri].hops.insert(pooled[ri].hops.end(), profile[ri].hops.begin(),
                             profile[ri].hops.end());
  }
  std::vector<double> medians(radii.size());
  for (std::size_t ri = 0; ri < radii.size(); ++ri) {
    auto& p = pooled[ri];
    p.count = p.hops.size();
    if (p.count < 30) report.sufficient = false;
    std::vector<double> values(p.hops.begin(), p.hops.end());
    std::sort(values.begin(), values.end());
    if (!values.empty()) {
      const double pos = 0.5 * double(values.size() - 1);
      const std::size_t i = std::size_t(pos);
      const double frac = pos - double(i);
      p.median = i + 1 < values.size() ? values[i] * (1 - frac) + values[i + 1] * frac
                                       : values.back();
      p.q25 = values[std::size_t(0.25 * double(values.size() - 1))];
      p.q75 = values[std::size_t(0.75 * double(values.size() - 1))];
    }
    medians[ri] = p.median;
  }
  report.profile = pooled;
  if (!report.sufficient) return report;

  std::vector<double> f_loglog(radii.size()), f_polylog(radii.size()), f_linear(radii.size());
  for (std::size_t ri = 0; ri < radii.size(); ++ri) {
    f_loglog[ri] = std::log(std::log(radii[ri]));
    f_polylog[ri] = std::pow(std::log(radii[ri]), cell.delta);
    f_linear[ri] = radii[ri];
  }
  report.rss_loglog = loro_rss(f_loglog, medians);
  report.rss_polylog = loro_rss(f_polylog, medians);
  report.rss_linear = loro_rss(f_linear, medians);

  report.best = "loglog";
  double best = report.rss_loglog;
  if (report.rss_polylog < best) {
    best = report.rss_polylog;
    report.best = "polylog";
  }
  if (report.rss_linear < best) {
    best = report.rss_linear;
    report.best = "linear";
  }
  const double others_min =
      report.best == "loglog"
          ? std::min(report.rss_polylog, report.rss_linear)
          : (report.best == "polylog" ? std::min(report.rss_loglog, report.rss_linear)
                                      : std::min(report.rss_loglog, report.rss_polylog));
  report.strict = best < others_min;
  return report;
}

std::vector<GrowthFitReport> distance_regimes(const std::vector<DistanceCell>& cells,
                                              const std::vector<double>& radii,
                                              std::size_t pairs_per_radius,
                                              std::uint64_t replicates, RngStream rng,
                                              bool fast) {
  std::vector<GrowthFitReport> out;
  for (std::size_t ci = 0; ci < cells.size(); ++ci)
    out.push_back(fit_growth_law(cells[ci], radii, pairs_per_radius, replicates,
                                 rng.fork(0xD15 + ci), fast));
  return out;
}

std::string to_string(Trend t) {
  switch (t) {
    case Trend::increasing: return "increasing";
    case Trend::decreasing: return "decreasing";
    case Trend::flat: return "flat";
  }
  return "?";
}

std::string to_string(LambdaSignature s) {
  switch (s) {
    case LambdaSignature::zero: return "ZERO";
    case LambdaSignature::positive_finite: return "POSITIVE_FINITE";
    case LambdaSignature::infinite: return "INFINITE";
    case LambdaSignature::ambiguous: return "AMBIGUOUS";
  }
  return "?";
}

}  // namespace percolab
