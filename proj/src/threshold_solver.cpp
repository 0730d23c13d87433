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

#include "strathyp/threshold_solver.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "strathyp/errors.hpp"

namespace strathyp {
namespace {

constexpr int kMaxAlphaBisections = 200;

void RequireEps(double eps, const char* op) {
  if (!(eps > 0.0 && eps < 0.5)) {
    throw DomainError(std::string(op) + ": eps must lie in (0, 0.5)");
  }
}

}  // namespace

ParticipationThreshold participation_threshold(Probability alpha,
                                               const EconomicInstance& inst,
                                               double eps) {
  RequireEps(eps, "participation_threshold");
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw DomainError("participation_threshold: alpha must lie in (0, 1)");
  }
  ParticipationThreshold out;
  auto participates = [&](double mu0) {
    ++out.best_response_calls;
    return best_response(alpha, AgentBelief(mu0), inst).participates;
  };

  constexpr double kLo = kBeliefClamp;
  constexpr double kHi = 1.0 - kBeliefClamp;
  const double pivot = std::clamp(inst.mu_b, kLo, kHi);

  // Invariant after the first two probes: abstain at lo, participate at hi.
  double lo = kLo;
  double hi = kHi;
  if (participates(pivot)) {
    if (participates(kLo)) {
      out.mu_tau = kLo;
      out.status = ThresholdStatus::kAllParticipate;
      return out;
    }
    hi = pivot;
  } else {
    if (!participates(kHi)) {
      out.mu_tau = kHi;
      out.status = ThresholdStatus::kNoneParticipate;
      return out;
    }
    lo = pivot;
  }

  while (hi - lo > eps) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (participates(mid)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  out.mu_tau = 0.5 * (lo + hi);
  out.epsilon = hi - lo;
  return out;
}

double critical_alpha_closed_form(const EconomicInstance& inst) {
  return (inst.fixed_cost + inst.cost_per_sample * static_cast<double>(inst.n_min)) /
         inst.revenue;
}

CriticalAlpha critical_alpha(const EconomicInstance& inst, double eps) {
  RequireEps(eps, "critical_alpha");
  CriticalAlpha out;
  auto threshold_at = [&](double alpha) {
    ++out.threshold_calls;
    return participation_threshold(alpha, inst, eps);
  };
  // Exact, because participation_threshold decides the baseline belief first.
  auto at_or_below_baseline = [&](const ParticipationThreshold& t) {
    return t.mu_tau <= inst.mu_b;
  };

  double lo = eps;
  double hi = 1.0 - eps;
  ParticipationThreshold at_hi = threshold_at(hi);
  if (!at_or_below_baseline(at_hi)) {
    out.alpha_hat = hi;
    out.mu_tau = at_hi.mu_tau;
    out.status = AlphaHatStatus::kClampedHigh;
    return out;
  }
  const ParticipationThreshold at_lo = threshold_at(lo);
  if (at_or_below_baseline(at_lo)) {
    out.alpha_hat = lo;
    out.mu_tau = at_lo.mu_tau;
    out.status = AlphaHatStatus::kClampedLow;
    return out;
  }

  // Invariant: mu_tau(lo) > mu_b >= mu_tau(hi).
  for (int i = 0; i < kMaxAlphaBisections; ++i) {
    if (hi - lo <= eps && inst.mu_b - at_hi.mu_tau <= eps) break;
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    ParticipationThreshold at_mid = threshold_at(mid);
    if (at_or_below_baseline(at_mid)) {
      hi = mid;
      at_hi = at_mid;
    } else {
      lo = mid;
    }
  }
  out.alpha_hat = hi;
  out.epsilon = hi - lo;
  out.mu_tau = at_hi.mu_tau;
  return out;
}

}  // namespace strathyp
