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

#ifndef STRATHYP_THRESHOLD_SOLVER_HPP_
#define STRATHYP_THRESHOLD_SOLVER_HPP_

#include "strathyp/agent_model.hpp"

namespace strathyp {

inline constexpr double kDefaultSearchEps = 1e-6;

enum class ThresholdStatus {
  kInterior,          // a belief in the clamp range separates the two groups
  kAllParticipate,    // even the lowest clamped belief participates
  kNoneParticipate,   // even the highest clamped belief abstains
};

// mu_tau(alpha): agents with mu0 >= mu_tau participate, those below abstain.
struct ParticipationThreshold {
  double mu_tau = 0.0;
  double epsilon = 0.0;  // width of the final bracket
  ThresholdStatus status = ThresholdStatus::kInterior;
  int best_response_calls = 0;
};

// Bisection over beliefs with best-response participation as the predicate.
// The first probe is the baseline mu_b, so the sign of mu_tau - mu_b is decided
// exactly rather than to within eps. Throws DomainError for eps <= 0 or alpha
// outside (0, 1).
ParticipationThreshold participation_threshold(Probability alpha,
                                               const EconomicInstance& inst,
                                               double eps = kDefaultSearchEps);

enum class AlphaHatStatus {
  kInterior,
  kClampedHigh,  // no alpha < 1 - eps lets the baseline agent break even
  kClampedLow,   // the baseline agent already participates at alpha = eps
};

// alpha_hat: the p-value threshold at which mu_tau(alpha_hat) = mu_b.
//
// Depends only on the economic instance; no prior enters. Under the normal
// approximation Pass(alpha, mu_b, n) = alpha for every n, so the baseline
// agent breaks even exactly at alpha = (c0 + c n_min) / R.
struct CriticalAlpha {
  Probability alpha_hat = 0.0;
  double epsilon = 0.0;  // width of the final alpha bracket
  double mu_tau = 0.0;   // participation threshold at alpha_hat
  AlphaHatStatus status = AlphaHatStatus::kInterior;
  int threshold_calls = 0;
};

// Nested bisection: over alpha, each step solving for mu_tau(alpha). Stops once
// the alpha bracket is narrower than eps and |mu_tau(alpha_hat) - mu_b| <= eps.
CriticalAlpha critical_alpha(const EconomicInstance& inst,
                             double eps = kDefaultSearchEps);

// (c0 + c n_min) / R, the value critical_alpha converges to.
double critical_alpha_closed_form(const EconomicInstance& inst);

}  // namespace strathyp

#endif  // STRATHYP_THRESHOLD_SOLVER_HPP_
