#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "percolab/analysis.hpp"
#include "percolab/models.hpp"
#include "percolab/theory.hpp"

namespace percolab {

// One Monte-Carlo measurement row.
struct ResultRecord {
  std::map<std::string, std::string> params;  // flattened grid-point parameters
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;
  std::string observable;
  std::optional<double> value;      // empty = NA
  std::optional<double> walltime_ms;
  std::string error;                // tag for NA rows
};

struct SweepConfig {
  std::map<std::string, std::string> base;             // flat model keys
  std::map<std::string, std::vector<std::string>> grid;  // grid.<param> lists
  std::uint64_t replicates = 1;
  std::uint64_t seed = 0;
  std::vector<std::string> observables;
  std::string out;                   // output stem; writes <out>.csv, <out>.summary.json
  bool record_walltime = false;      // off by default so reruns are byte-identical
  int threads = 0;                   // 0 = library default
};

SweepConfig parse_sweep_config(const std::string& text);
SweepConfig load_sweep_config(const std::string& path);

// Known observable names, in the order they are evaluated.
const std::vector<std::string>& known_observables();

struct SweepResult {
  std::vector<ResultRecord> records;  // sorted by (grid point, replicate, observable)
  std::string csv_path;
  std::string summary_path;
};

// Runs every (grid-point, replicate), evaluates all observables on one
// sampled graph per replicate, writes <out>.csv atomically plus a summary
// JSON.  Stream for (grid g, replicate r) is mix(g, r): rerunning the same
// config reproduces the same bytes.  Per-point failures become NA rows with
// an error tag; the sweep itself keeps going.
SweepResult run_sweep(const SweepConfig& config);

std::string records_to_csv(const std::vector<ResultRecord>& records);

// ------------------------------------------------------------------
// Phase-diagram signatures (lambda_c = 0 / positive finite / infinite).

enum class Trend { increasing, decreasing, flat };
// Mann-Kendall-style sign test over all size pairs; a pair only counts when
// its two-proportion z-score clears the 95% level.
Trend crossing_trend(const std::vector<CrossingEstimate>& by_size);

enum class LambdaSignature { zero, positive_finite, infinite, ambiguous };

struct PhaseCell {
  double alpha = 0, beta = 0;
  bool boundary = false;                       // straddles a theorem boundary
  LambdaSignature signature = LambdaSignature::ambiguous;
  LambdaCRegime predicted = LambdaCRegime::boundary;
  bool agrees = false;
  // per-lambda crossing estimates, indexed [lambda][size]
  std::vector<std::vector<CrossingEstimate>> estimates;
  std::vector<Trend> trends;  // per lambda
};

struct PhaseDiagram {
  int d = 1;
  std::vector<double> lambdas;
  std::vector<std::int64_t> sides;
  std::vector<PhaseCell> cells;
};

// Size-trend of the crossing probability at each lambda, classified into a
// lambda_c signature and compared with classify_regime.
PhaseDiagram phase_diagram(int d, const std::vector<double>& alpha_grid,
                           const std::vector<double>& beta_grid,
                           const std::vector<double>& lambda_grid,
                           const std::vector<std::int64_t>& sides, std::uint64_t replicates,
                           RngStream rng);

// ------------------------------------------------------------------
// Distance-regime fits: median d(0,x) against {lnln r, (ln r)^Delta, r}.

struct DistanceCell {
  ModelSpec spec;
  std::string label;
  double delta = 2;  // exponent for the polylog candidate
};

struct GrowthFitReport {
  std::string label;
  bool sufficient = true;               // >= 30 valid pairs at every radius
  std::vector<RadiusProfile> profile;   // pooled over replicates
  double rss_loglog = 0, rss_polylog = 0, rss_linear = 0;  // leave-one-out residuals
  std::string best;                     // "loglog" | "polylog" | "linear"
  bool strict = false;                  // best is strictly below both others
  double delta_used = 2;
};

GrowthFitReport fit_growth_law(const DistanceCell& cell, const std::vector<double>& radii,
                               std::size_t pairs_per_radius, std::uint64_t replicates,
                               RngStream rng, bool fast = false);

std::vector<GrowthFitReport> distance_regimes(const std::vector<DistanceCell>& cells,
                                              const std::vector<double>& radii,
                                              std::size_t pairs_per_radius,
                                              std::uint64_t replicates, RngStream rng,
                                              bool fast = false);

std::string to_string(Trend t);
std::string to_string(LambdaSignature s);

}  // namespace percolab
