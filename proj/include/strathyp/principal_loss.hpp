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

// The principal's Type I / Type II losses when every agent best responds.
//
// With Q the prior CDF and mu_tau = mu_tau(alpha):
//   fp_particip = 1/Q(mu_b)       * int_{max(mu_tau, lo)}^{mu_b} Pass* q
//   fn_particip = 1/(1 - Q(mu_b)) * int_{max(mu_tau, mu_b)}^{hi} (1 - Pass*) q
//   fn_abstain  = [Q(max(mu_tau, mu_b)) - Q(mu_b)] / (1 - Q(mu_b))
//   fp_abstain  = 0, since abstaining agents never pass.
// Pass* is the pass probability at the agent's own best response.

#ifndef STRATHYP_PRINCIPAL_LOSS_HPP_
#define STRATHYP_PRINCIPAL_LOSS_HPP_

#include <array>
#include <span>
#include <vector>

#include "strathyp/agent_model.hpp"
#include "strathyp/special_functions.hpp"
#include "strathyp/sweep_table.hpp"
#include "strathyp/threshold_solver.hpp"

namespace strathyp {

struct LossWeights {
  double lambda_fp = 1.0;
  double lambda_fn = 1.0;

  void validate() const;
};

// Composite Simpson rule; the number of panels applies to each integration
// interval separately.
struct QuadratureSpec {
  int panels = 2000;

  void validate() const;
};

// Precision of mu_tau when it serves as an integration limit. Finer than the
// search default because an error in the limit moves every component by about
// q(mu_tau) times that error.
inline constexpr double kLossThresholdEps = 1e-10;

// Slack used by the monotonicity checks and the panel-doubling convergence test.
inline constexpr double kQuadratureTolerance = 1e-6;

enum LossFlag : unsigned {
  kNoIneffectiveMass = 1u << 0,  // Q(mu_b) = 0; FP components reported as 0
  kNoEffectiveMass = 1u << 1,    // Q(mu_b) = 1; FN components reported as 0
  kThresholdClamped = 1u << 2,   // mu_tau hit the belief clamp
};

struct LossBreakdown {
  double fp_particip = 0.0;
  double fp_abstain = 0.0;
  double fn_particip = 0.0;
  double fn_abstain = 0.0;
  double mu_tau = 0.0;
  unsigned flags = 0;

  double fp_total() const { return fp_particip + fp_abstain; }
  double fn_total() const { return fn_particip + fn_abstain; }
  double total(const LossWeights& w) const {
    return w.lambda_fp * fp_total() + w.lambda_fn * fn_total();
  }
};

LossBreakdown loss_components(Probability alpha, const EconomicInstance& inst,
                              const EffectivenessPrior& prior,
                              const QuadratureSpec& quad = {},
                              double threshold_eps = kLossThresholdEps);

double total_loss(Probability alpha, const EconomicInstance& inst,
                  const EffectivenessPrior& prior, const LossWeights& weights,
                  const QuadratureSpec& quad = {},
                  double threshold_eps = kLossThresholdEps);

struct OptimalAlpha {
  Probability alpha = 0.0;
  double total_loss = 0.0;
  Probability alpha_hat = 0.0;
};

// Grid scan of total_loss over grid_resolution evenly spaced points of
// [alpha_hat, 1 - eps], where alpha_hat comes from critical_alpha(inst, eps).
// Ties go to the smaller alpha, so the result is never below alpha_hat.
OptimalAlpha optimal_alpha(const EconomicInstance& inst,
                           const EffectivenessPrior& prior,
                           const LossWeights& weights, const QuadratureSpec& quad,
                           int grid_resolution, double eps = kDefaultSearchEps);

// Column names of the table produced by sweep_alpha.
inline const std::vector<std::string>& alpha_sweep_columns() {
  static const std::vector<std::string> kColumns = {
      "alpha",      "mu_tau",     "fp_particip", "fn_particip",
      "fn_abstain", "fn_total",   "total_loss",  "pass_probe_1",
      "pass_probe_2", "pass_probe_3", "flags"};
  return kColumns;
}

// Default probe beliefs: the baseline, and the midpoint and upper end of the
// effective part of the prior support.
std::array<double, 3> default_probe_beliefs(const EconomicInstance& inst,
                                            const EffectivenessPrior& prior);

// One row per alpha, in grid order. Rows are evaluated concurrently. Throws
// DomainError unless the grid is strictly increasing inside (0, 1).
SweepTable sweep_alpha(const EconomicInstance& inst, const EffectivenessPrior& prior,
                       const LossWeights& weights, const QuadratureSpec& quad,
                       std::span<const double> alpha_grid,
                       const std::array<double, 3>& probe_beliefs);

// Grid helpers. Both include the endpoints; points >= 2.
std::vector<double> linear_grid(double lo, double hi, int points);
std::vector<double> log_grid(double lo, double hi, int points);

// 400 log-spaced points in [1e-4, 0.9].
std::vector<double> default_alpha_grid();

}  // namespace strathyp

#endif  // STRATHYP_PRINCIPAL_LOSS_HPP_
