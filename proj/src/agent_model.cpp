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

#include "strathyp/agent_model.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "strathyp/errors.hpp"

namespace strathyp {
namespace {

void RequireOpenAlpha(Probability alpha, const char* op) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw DomainError(std::string(op) + ": alpha must lie in (0, 1), got " +
                      std::to_string(alpha));
  }
}

// Per-(alpha, mu0, instance) constants shared by every evaluation of Pass and
// u during a best-response search.
class TrialModel {
 public:
  TrialModel(Probability alpha, AgentBelief mu0, const EconomicInstance& inst)
      : inst_(inst),
        d_alpha_(-std_normal_quantile(alpha)),
        sigma0_(std::sqrt(mu0.value() * (1.0 - mu0.value()))),
        sigma_b_(std::sqrt(inst.mu_b * (1.0 - inst.mu_b))),
        delta_(mu0.value() - inst.mu_b) {}

  double v(double n) const {
    return (d_alpha_ * sigma_b_ - delta_ * std::sqrt(n)) / sigma0_;
  }

  Probability pass(SampleCount n) const {
    if (n == 0) return 0.0;
    return std_normal_sf(v(static_cast<double>(n)));
  }

  double utility(SampleCount n) const {
    if (n == 0) return 0.0;
    return inst_.revenue * pass(n) - inst_.fixed_cost -
           inst_.cost_per_sample * static_cast<double>(n);
  }

  double slope(double n) const {
    return inst_.revenue * delta_ / (2.0 * sigma0_ * std::sqrt(n)) *
               std_normal_pdf(v(n)) -
           inst_.cost_per_sample;
  }

  // d2u/dn2 = R delta phi(v) / (4 sigma0 n^{3/2}) * [delta v sqrt(n) / sigma0 - 1],
  // so its sign is that of this quadratic in t = sqrt(n), scaled by sigma0^2.
  double curvature_sign(double t) const {
    return -delta_ * delta_ * t * t + d_alpha_ * sigma_b_ * delta_ * t -
           sigma0_ * sigma0_;
  }

  double d_alpha() const { return d_alpha_; }
  double sigma0() const { return sigma0_; }
  double sigma_b() const { return sigma_b_; }
  double delta() const { return delta_; }

 private:
  const EconomicInstance& inst_;
  double d_alpha_;
  double sigma0_;
  double sigma_b_;
  double delta_;
};

CurvatureRegions Regions(const TrialModel& model, const EconomicInstance& inst) {
  CurvatureRegions out;
  // Roots of t^2 - (d sigma_b / delta) t + sigma0^2 / delta^2 = 0. Their
  // product is positive, so they are both positive (d > 0) or both negative.
  const double b = model.d_alpha() * model.sigma_b() / model.delta();
  const double constant =
      model.sigma0() * model.sigma0() / (model.delta() * model.delta());
  const double disc = b * b - 4.0 * constant;
  if (disc > 0.0 && b > 0.0) {
    const double t_hi = 0.5 * (b + std::sqrt(disc));
    const double t_lo = constant / t_hi;
    out.inflection_t = {t_lo, t_hi};
    out.inflection_n = {t_lo * t_lo, t_hi * t_hi};
  }

  const double n_lo = static_cast<double>(inst.n_min);
  const double n_hi = static_cast<double>(inst.n_max);
  std::vector<double> cuts = {n_lo};
  for (double r : out.inflection_n) {
    if (r > n_lo && r < n_hi) cuts.push_back(r);
  }
  cuts.push_back(n_hi);

  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double mid = 0.5 * (cuts[i] + cuts[i + 1]);
    const Curvature kind = model.curvature_sign(std::sqrt(mid)) <= 0.0
                               ? Curvature::kConcave
                               : Curvature::kConvex;
    out.regions.push_back({cuts[i], cuts[i + 1], kind});
  }
  return out;
}

// Smallest integer n in [lo, hi] maximising u on a concave stretch, by
// bisection on the sign of the forward difference u(n + 1) - u(n).
SampleCount ConcaveArgmax(const TrialModel& model, SampleCount lo, SampleCount hi) {
  SampleCount left = lo;
  SampleCount right = hi;  // answer lies in [left, right]
  while (left < right) {
    const SampleCount mid = left + (right - left) / 2;
    if (model.utility(mid + 1) - model.utility(mid) > 0.0) {
      left = mid + 1;
    } else {
      right = mid;
    }
  }
  return left;
}

OptimalTrial Trial(const TrialModel& model, SampleCount n, double u) {
  return {n, model.pass(n), u};
}

BestResponse Decide(const OptimalTrial& trial) {
  if (trial.utility < 0.0) return {};
  return {true, trial.n, trial.pass_prob, trial.utility};
}

}  // namespace

void EconomicInstance::validate() const {
  if (!(revenue > 0.0) || !std::isfinite(revenue)) {
    throw ValidationError("instance.R must be positive and finite");
  }
  if (!(fixed_cost >= 0.0) || !std::isfinite(fixed_cost)) {
    throw ValidationError("instance.c0 must be non-negative and finite");
  }
  if (!(cost_per_sample >= 0.0) || !std::isfinite(cost_per_sample)) {
    throw ValidationError("instance.c must be non-negative and finite");
  }
  if (!(mu_b >= kBeliefClamp && mu_b <= 1.0 - kBeliefClamp)) {
    throw ValidationError("instance.mu_b must lie in (0, 1)");
  }
  if (n_min < 1) throw ValidationError("instance.n_min must be at least 1");
  if (n_max < n_min) throw ValidationError("instance.n_max must be >= n_min");
}

AgentBelief::AgentBelief(double mu0) : mu0_(mu0) {
  if (!(mu0 >= kBeliefClamp && mu0 <= 1.0 - kBeliefClamp)) {
    throw DomainError("belief mu0 must lie in [1e-6, 1 - 1e-6], got " +
                      std::to_string(mu0));
  }
}

AgentBelief AgentBelief::clamped(double mu0) {
  if (!std::isfinite(mu0)) throw DomainError("belief mu0 must be finite");
  return AgentBelief(std::clamp(mu0, kBeliefClamp, 1.0 - kBeliefClamp));
}

double critical_region(Probability alpha, SampleCount n, Probability mu_b) {
  RequireOpenAlpha(alpha, "critical_region");
  if (n < 1) throw DomainError("critical_region: n must be at least 1");
  const double nd = static_cast<double>(n);
  return nd * mu_b - std_normal_quantile(alpha) * std::sqrt(nd * mu_b * (1.0 - mu_b));
}

Probability pass_probability(Probability alpha, AgentBelief mu0, SampleCount n,
                             Probability mu_b) {
  RequireOpenAlpha(alpha, "pass_probability");
  if (n < 0) throw DomainError("pass_probability: n must be non-negative");
  if (n == 0) return 0.0;
  EconomicInstance inst;
  inst.mu_b = mu_b;
  return TrialModel(alpha, mu0, inst).pass(n);
}

double utility(Probability alpha, AgentBelief mu0, SampleCount n,
               const EconomicInstance& inst) {
  RequireOpenAlpha(alpha, "utility");
  if (n != 0 && (n < inst.n_min || n > inst.n_max)) {
    throw DomainError("utility: n must be 0 or inside [n_min, n_max], got " +
                      std::to_string(n));
  }
  return TrialModel(alpha, mu0, inst).utility(n);
}

double utility_slope(Probability alpha, AgentBelief mu0, double n,
                     const EconomicInstance& inst) {
  RequireOpenAlpha(alpha, "utility_slope");
  if (!(n > 0.0)) throw DomainError("utility_slope: n must be positive");
  if (!(mu0.value() > inst.mu_b)) {
    throw DomainError("utility_slope: requires mu0 > mu_b");
  }
  return TrialModel(alpha, mu0, inst).slope(n);
}

CurvatureRegions curvature_regions(Probability alpha, AgentBelief mu0,
                                   const EconomicInstance& inst) {
  RequireOpenAlpha(alpha, "curvature_regions");
  if (!(mu0.value() > inst.mu_b)) {
    throw DomainError("curvature_regions: requires mu0 > mu_b");
  }
  return Regions(TrialModel(alpha, mu0, inst), inst);
}

OptimalTrial optimal_trial(Probability alpha, AgentBelief mu0,
                           const EconomicInstance& inst) {
  RequireOpenAlpha(alpha, "optimal_trial");
  const TrialModel model(alpha, mu0, inst);

  // Without a positive effect, Pass is non-increasing in n and cost is
  // increasing, so the smallest trial dominates.
  if (!(mu0.value() > inst.mu_b) || inst.n_min == inst.n_max) {
    return Trial(model, inst.n_min, model.utility(inst.n_min));
  }

  std::vector<SampleCount> candidates = {inst.n_min, inst.n_max};
  const CurvatureRegions split = Regions(model, inst);
  for (double r : split.inflection_n) {
    for (double edge : {std::floor(r), std::ceil(r)}) {
      if (edge >= static_cast<double>(inst.n_min) &&
          edge <= static_cast<double>(inst.n_max)) {
        candidates.push_back(static_cast<SampleCount>(edge));
      }
    }
  }
  for (const CurvatureRegion& region : split.regions) {
    const auto lo = static_cast<SampleCount>(std::ceil(region.begin));
    const auto hi = static_cast<SampleCount>(std::floor(region.end));
    if (lo > hi) continue;
    if (region.curvature == Curvature::kConcave) {
      candidates.push_back(ConcaveArgmax(model, lo, hi));
    } else {
      // A convex function peaks at an endpoint.
      candidates.push_back(lo);
      candidates.push_back(hi);
    }
  }

  std::sort(candidates.begin(), candidates.end());
  SampleCount best_n = candidates.front();
  double best_u = model.utility(best_n);
  for (SampleCount n : candidates) {
    const double u = model.utility(n);
    if (u > best_u) {
      best_u = u;
      best_n = n;
    }
  }
  return Trial(model, best_n, best_u);
}

BestResponse best_response(Probability alpha, AgentBelief mu0,
                           const EconomicInstance& inst) {
  return Decide(optimal_trial(alpha, mu0, inst));
}

BestResponse best_response_bruteforce(Probability alpha, AgentBelief mu0,
                                      const EconomicInstance& inst) {
  RequireOpenAlpha(alpha, "best_response_bruteforce");
  if (inst.n_max - inst.n_min > kBruteForceMaxRange) {
    throw RefusalError("best_response_bruteforce: n range exceeds 10^6 samples");
  }
  const TrialModel model(alpha, mu0, inst);
  SampleCount best_n = inst.n_min;
  double best_u = model.utility(best_n);
  for (SampleCount n = inst.n_min + 1; n <= inst.n_max; ++n) {
    const double u = model.utility(n);
    if (u > best_u) {
      best_u = u;
      best_n = n;
    }
  }
  return Decide(Trial(model, best_n, best_u));
}

}  // namespace strathyp
