// Copyright 2026 The strathyp Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Run configuration and experiment runners behind the strathyp command line.
//
// A config is one JSON document with the top-level keys
//   instance    { R, c0, c, mu_b, n_min?, n_max?, units? }
//   prior       { family?, mean, sd, lo, hi }         family: "truncated_normal"
//   weights     { lambda_fp?, lambda_fn? }
//   quadrature  { panels? }
//   grids       { alpha?, R?, c0? }  each { values } or { spacing?, lo, hi, points }
//   output      { loss_sweep?, heatmap? }             CSV paths
// Only instance is required by the parser; each command adds its own needs.

#ifndef STRATHYP_CASESTUDY_HPP_
#define STRATHYP_CASESTUDY_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "strathyp/agent_model.hpp"
#include "strathyp/principal_loss.hpp"
#include "strathyp/special_functions.hpp"
#include "strathyp/sweep_table.hpp"
#include "strathyp/threshold_solver.hpp"

namespace strathyp::casestudy {

struct PriorSpec {
  double mean = 0.0;
  double sd = 0.0;
  double lo = 0.0;
  double hi = 0.0;

  TruncatedNormalPrior build() const { return {mean, sd, lo, hi}; }
};

struct RunConfig {
  EconomicInstance instance;
  std::string units;
  std::optional<PriorSpec> prior;
  LossWeights weights;
  QuadratureSpec quadrature;
  std::optional<std::vector<double>> alpha_grid;
  std::optional<std::vector<double>> revenue_grid;
  std::optional<std::vector<double>> fixed_cost_grid;
  std::string loss_sweep_output;  // empty when unset
  std::string heatmap_output;
};

enum class Command { kBestResponse, kThreshold, kCriticalAlpha, kLossSweep, kHeatmap };

// Parses and validates a config document. Every offending field is reported
// in one ValidationError, one "path: problem" per line. `source` prefixes
// parse errors.
RunConfig parse_config(std::string_view text, const std::string& source = "config");

// Reads the file (IoError if it cannot be opened) and calls parse_config.
RunConfig load_config(const std::string& path);

// Throws ValidationError when the config lacks something the command needs.
void require_for(const RunConfig& config, Command command);

// Names used on the command line and in error messages.
const char* command_name(Command command);

inline const std::vector<std::string>& loss_sweep_columns() {
  static const std::vector<std::string> kColumns = {
      "alpha",      "mu_tau",   "fp_particip", "fn_particip",
      "fn_abstain", "fn_total", "total_loss"};
  return kColumns;
}

inline const std::vector<std::string>& heatmap_columns() {
  static const std::vector<std::string> kColumns = {
      "R", "c0", "alpha_hat", "clamped", "alpha_hat_le_0_05"};
  return kColumns;
}

inline const std::vector<std::string>& critical_alpha_columns() {
  static const std::vector<std::string> kColumns = {
      "alpha_hat", "closed_form", "discrepancy", "clamped"};
  return kColumns;
}

// The loss-sweep table over the config's alpha grid. With with_flags the
// LossFlag bitmask is appended as a "flags" column.
SweepTable run_loss_sweep(const RunConfig& config, bool with_flags = false);

// Long-format alpha_hat over revenue_grid x fixed_cost_grid, R-major. Cells are
// computed concurrently and emitted in grid order. `clamped` is 1 when the
// search hit either end of the alpha range.
SweepTable run_heatmap(const RunConfig& config, double eps = kDefaultSearchEps);

struct CriticalAlphaReport {
  CriticalAlpha result;
  double closed_form = 0.0;
  double discrepancy = 0.0;  // |alpha_hat - closed_form|
};

CriticalAlphaReport run_critical_alpha(const EconomicInstance& instance,
                                       double eps = kDefaultSearchEps);

SweepTable critical_alpha_table(const CriticalAlphaReport& report);

// gnuplot script that plots a CSV written by loss-sweep or heatmap.
std::string gnuplot_script(Command command, const std::string& csv_path);

// Writes the table to path, or to stdout when path is empty. IoError on failure.
void write_table(const SweepTable& table, const std::string& path);

}  // namespace strathyp::casestudy

#endif  // STRATHYP_CASESTUDY_HPP_
