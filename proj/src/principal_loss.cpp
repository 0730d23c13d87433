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

#include "strathyp/principal_loss.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "parallel.hpp"
#include "strathyp/errors.hpp"

namespace strathyp {
namespace {

// Composite Simpson over [a, b]; zero when the interval is empty.
template <class F>
double Simpson(F&& f, double a, double b, int panels) {
  if (!(b > a)) return 0.0;
  const double h = (b - a) / panels;
  double sum = f(a) + f(b);
  for (int i = 1; i < panels; ++i) {
    sum += (i % 2 ? 4.0 : 2.0) * f(a + h * i);
  }
  return sum * h / 3.0;
}

// Pass probability of an agent known to participate. Nodes on the lower
// integration limit sit within threshold_eps of mu_tau and take the
// participating value, which is the right-hand limit of the integrand.
double ParticipantPass(Probability alpha, double mu0, const EconomicInstance& inst) {
  return optimal_trial(alpha, AgentBelief::clamped(mu0), inst).pass_prob;
}

}  // namespace

void LossWeights::validate() const {
  if (!(lambda_fp >= 0.0) || !std::isfinite(lambda_fp)) {
    throw ValidationError("weights.lambda_fp must be non-negative");
  }
  if (!(lambda_fn >= 0.0) || !std::isfinite(lambda_fn)) {
    throw ValidationError("weights.lambda_fn must be non-negative");
  }
  if (lambda_fp == 0.0 && lambda_fn == 0.0) {
    throw ValidationError("weights: lambda_fp and lambda_fn cannot both be zero");
  }
}

void QuadratureSpec::validate() const {
  if (panels < 10 || panels % 2 != 0) {
    throw ValidationError("quadrature.panels must be even and at least 10");
  }
}

LossBreakdown loss_components(Probability alpha, const EconomicInstance& inst,
                              const EffectivenessPrior& prior,
                              const QuadratureSpec& quad, double threshold_eps) {
  quad.validate();
  LossBreakdown out;
  const ParticipationThreshold threshold =
      participation_threshold(alpha, inst, threshold_eps);
  out.mu_tau = threshold.mu_tau;
  if (threshold.status != ThresholdStatus::kInterior) out.flags |= kThresholdClamped;

  const double mu_b = inst.mu_b;
  const double lo = prior.lo();
  const double hi = prior.hi();
  const double q_b = prior.cdf(mu_b);
  const double effective_mass = 1.0 - q_b;

  // Splitting the domain at mu_b and mu_tau keeps each Simpson interval free
  // of the participation step.
  if (q_b > 0.0) {
    const double a = std::max(out.mu_tau, lo);
    const double b = std::min(mu_b, hi);
    auto integrand = [&](double mu0) {
      return ParticipantPass(alpha, mu0, inst) * prior.pdf(mu0);
    };
    out.fp_particip = std::clamp(Simpson(integrand, a, b, quad.panels) / q_b, 0.0, 1.0);
  } else {
    out.flags |= kNoIneffectiveMass;
  }

  if (effective_mass > 0.0) {
    const double start = std::max(out.mu_tau, mu_b);
    const double a = std::max(start, lo);
    auto integrand = [&](double mu0) {
      return (1.0 - ParticipantPass(alpha, mu0, inst)) * prior.pdf(mu0);
    };
    out.fn_particip =
        std::clamp(Simpson(integrand, a, hi, quad.panels) / effective_mass, 0.0, 1.0);
    out.fn_abstain =
        std::clamp((prior.cdf(start) - q_b) / effective_mass, 0.0, 1.0);
  } else {
    out.flags |= kNoEffectiveMass;
  }
  return out;
}

double total_loss(Probability alpha, const EconomicInstance& inst,
                  const EffectivenessPrior& prior, const LossWeights& weights,
                  const QuadratureSpec& quad, double threshold_eps) {
  weights.validate();
  return loss_components(alpha, inst, prior, quad, threshold_eps).total(weights);
}

OptimalAlpha optimal_alpha(const EconomicInstance& inst,
                           const EffectivenessPrior& prior,
                           const LossWeights& weights, const QuadratureSpec& quad,
                           int grid_resolution, double eps) {
  if (grid_resolution < 2) {
    throw DomainError("optimal_alpha: grid_resolution must be at least 2");
  }
  weights.validate();
  quad.validate();
  OptimalAlpha out;
  out.alpha_hat = critical_alpha(inst, eps).alpha_hat;
  const double right = 1.0 - eps;
  if (!(right > out.alpha_hat)) {
    out.alpha = out.alpha_hat;
    out.total_loss = total_loss(out.alpha, inst, prior, weights, quad);
    return out;
  }

  const std::vector<double> grid = linear_grid(out.alpha_hat, right, grid_resolution);
  std::vector<double> losses(grid.size());
  internal::ParallelFor(grid.size(), [&](std::size_t i) {
    losses[i] = total_loss(grid[i], inst, prior, weights, quad);
  });
  std::size_t best = 0;
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (losses[i] < losses[best]) best = i;
  }
  out.alpha = grid[best];
  out.total_loss = losses[best];
  return out;
}

std::array<double, 3> default_probe_beliefs(const EconomicInstance& inst,
                                            const EffectivenessPrior& prior) {
  const double top = prior.hi();
  const double base = std::clamp(inst.mu_b, kBeliefClamp, 1.0 - kBeliefClamp);
  const double upper = std::max(base, top);
  return {base, 0.5 * (base + upper), upper};
}

SweepTable sweep_alpha(const EconomicInstance& inst, const EffectivenessPrior& prior,
                       const LossWeights& weights, const QuadratureSpec& quad,
                       std::span<const double> alpha_grid,
                       const std::array<double, 3>& probe_beliefs) {
  weights.validate();
  quad.validate();
  for (std::size_t i = 0; i < alpha_grid.size(); ++i) {
    const double a = alpha_grid[i];
    if (!(a > 0.0 && a < 1.0)) {
      throw DomainError("sweep_alpha: grid values must lie in (0, 1)");
    }
    if (i > 0 && !(a > alpha_grid[i - 1])) {
      throw DomainError("sweep_alpha: grid must be strictly increasing");
    }
  }
  std::array<AgentBelief, 3> probes = {AgentBelief::clamped(probe_beliefs[0]),
                                       AgentBelief::clamped(probe_beliefs[1]),
                                       AgentBelief::clamped(probe_beliefs[2])};

  std::vector<std::vector<double>> rows(alpha_grid.size());
  internal::ParallelFor(alpha_grid.size(), [&](std::size_t i) {
    const double alpha = alpha_grid[i];
    const LossBreakdown loss = loss_components(alpha, inst, prior, quad);
    rows[i] = {alpha,
               loss.mu_tau,
               loss.fp_particip,
               loss.fn_particip,
               loss.fn_abstain,
               loss.fn_total(),
               loss.total(weights),
               best_response(alpha, probes[0], inst).pass_prob,
               best_response(alpha, probes[1], inst).pass_prob,
               best_response(alpha, probes[2], inst).pass_prob,
               static_cast<double>(loss.flags)};
  });

  SweepTable table(alpha_sweep_columns());
  for (auto& row : rows) table.add_row(std::move(row));
  return table;
}

std::vector<double> linear_grid(double lo, double hi, int points) {
  if (points < 2 || !(hi > lo)) {
    throw DomainError("linear_grid: need points >= 2 and hi > lo");
  }
  std::vector<double> grid(points);
  for (int i = 0; i < points; ++i) {
    grid[i] = lo + (hi - lo) * static_cast<double>(i) / (points - 1);
  }
  grid.back() = hi;
  return grid;
}

std::vector<double> log_grid(double lo, double hi, int points) {
  if (!(lo > 0.0)) throw DomainError("log_grid: lo must be positive");
  std::vector<double> grid = linear_grid(std::log(lo), std::log(hi), points);
  for (double& g : grid) g = std::exp(g);
  grid.front() = lo;
  grid.back() = hi;
  return grid;
}

std::vector<double> default_alpha_grid() { return log_grid(1e-4, 0.9, 400); }

}  // namespace strathyp
