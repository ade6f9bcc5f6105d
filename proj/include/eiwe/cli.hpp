#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "eiwe/states.hpp"

namespace eiwe::cli {

enum class OutputFormat { csv, json };

// Flat key = value sweep description.  Lists are comma-separated; '#' starts
// a comment.  Exactly one of n_bar / temperature must be given; the model
// defaults to boltzmann when n_bar is primary and bose_einstein when
// temperature is.
struct SweepConfig {
  std::vector<double> r;
  std::vector<double> n_bar;        // primary when non-empty
  std::vector<double> temperature;  // primary when non-empty
  OccupationModel model = OccupationModel::boltzmann_approx;
  bool model_explicit = false;
  double omega = 0.0;               // rad/s, required
  std::vector<double> lambda = {1.0};
  std::vector<double> phi = {0.0};
  OutputFormat format = OutputFormat::csv;
  std::uint64_t seed = 0;
  bool oracle = false;
  int cutoff = 60;
};

// Throws std::invalid_argument with a line-tagged message on malformed input.
SweepConfig parse_config(const std::string& text);
SweepConfig load_config(const std::string& path);

// exit codes: 0 all checks pass, 1 numeric threshold violation,
// 2 usage / config error
inline constexpr int kExitOk = 0;
inline constexpr int kExitThreshold = 1;
inline constexpr int kExitUsage = 2;

struct CommandResult {
  int exit_code = kExitOk;
  std::string output;      // table / record, for stdout or --out
  std::string diagnostic;  // human-readable problem description, for stderr
};

// Work-law verification: one row per (r, n_bar) with columns
// r, xi, n_bar, S_eq, S_cond, W, W_closed, rel_dev.  Passes when every
// deviation is within the n_bar-graded gate (10% above 1e-4, 5% down to
// 1e-6, 2% at or below 1e-6).  Requires the boltzmann model with n_bar
// primary.
CommandResult cmd_verify_eq4(const SweepConfig& config);

// Full Cartesian sweep over r x occupation x lambda x phi, one WorkReport
// row per point, lexicographic in the grid axes.
CommandResult cmd_sweep(const SweepConfig& config);

// Gaussian pipeline vs. Fock brute force, one row per (r, n_bar) with columns
// r, n_bar, W_gaussian, W_oracle, abs_dev, rel_dev, trace_defect,
// alpha_spread, status.  Five outcomes are sampled per row from the seeded
// outcome distribution; alpha_spread is the spread of the brute-force work
// across them in units of k_B T (nats).  Requires oracle = on and every
// n_bar >= 0.05.
CommandResult cmd_oracle_compare(const SweepConfig& config);

// Single JSON record {xi, p0, delta_R}.
CommandResult cmd_curvature(double xi, double p0);

}  // namespace eiwe::cli
