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

// The agent's side of the approval game: an agent with a private belief mu0
// about its product's success rate decides whether to run a trial and how many
// samples n to collect, given the principal's p-value threshold alpha.
//
// Quantities used throughout:
//   sigma0  = sqrt(mu0 (1 - mu0))       sigma_b = sqrt(mu_b (1 - mu_b))
//   delta   = mu0 - mu_b                d_alpha = Phi^{-1}(1 - alpha)
//   v(n)    = (d_alpha sigma_b - delta sqrt(n)) / sigma0
//   Pass(n) = 1 - Phi(v(n)),  Pass(0) = 0
//   u(n)    = R Pass(n) - [n != 0] (c0 + c n)

#ifndef STRATHYP_AGENT_MODEL_HPP_
#define STRATHYP_AGENT_MODEL_HPP_

#include <cstdint>
#include <vector>

#include "strathyp/special_functions.hpp"

namespace strathyp {

using SampleCount = std::int64_t;

inline constexpr SampleCount kDefaultMinSamples = 1;
inline constexpr SampleCount kDefaultMaxSamples = 100000;

// Beliefs are kept this far away from 0 and 1 so that sigma0 > 0.
inline constexpr double kBeliefClamp = 1e-6;

// Revenue R and costs (c0, c) share a money unit (millions USD in the bundled
// presets).
struct EconomicInstance {
  double revenue = 1.0;          // R
  double fixed_cost = 0.0;       // c0
  double cost_per_sample = 0.0;  // c
  double mu_b = 0.5;             // baseline effectiveness
  SampleCount n_min = kDefaultMinSamples;
  SampleCount n_max = kDefaultMaxSamples;

  // Throws ValidationError naming the first violated invariant.
  void validate() const;
};

// An agent's private effectiveness belief, inside [kBeliefClamp, 1 - kBeliefClamp].
class AgentBelief {
 public:
  // Throws DomainError outside the clamp range.
  explicit AgentBelief(double mu0);

  // Projects an arbitrary finite value into the clamp range.
  static AgentBelief clamped(double mu0);

  double value() const { return mu0_; }

 private:
  double mu0_;
};

struct BestResponse {
  bool participates = false;
  SampleCount n_star = 0;  // 0 when abstaining
  Probability pass_prob = 0.0;
  double utility = 0.0;
};

// The utility-maximising trial among n in [n_min, n_max], before the agent
// compares it with abstaining.
struct OptimalTrial {
  SampleCount n = 0;
  Probability pass_prob = 0.0;
  double utility = 0.0;
};

enum class Curvature { kConcave, kConvex };

struct CurvatureRegion {
  double begin;
  double end;
  Curvature curvature;
};

// Partition of [n_min, n_max] into at most three intervals on which u(n),
// relaxed to real n, is concave or convex.
struct CurvatureRegions {
  std::vector<CurvatureRegion> regions;
  // Positive roots of the second-derivative sign quadratic, in t = sqrt(n)
  // and mapped back to n, before clamping to [n_min, n_max].
  std::vector<double> inflection_t;
  std::vector<double> inflection_n;
};

// z_{alpha,n} = n mu_b + Phi^{-1}(1 - alpha) sqrt(n mu_b (1 - mu_b)).
double critical_region(Probability alpha, SampleCount n, Probability mu_b);

// Probability that an n-sample trial clears the critical region. Zero for n = 0.
Probability pass_probability(Probability alpha, AgentBelief mu0, SampleCount n,
                             Probability mu_b);

// R Pass - [n != 0] (c0 + c n). n must be 0 or inside [n_min, n_max].
double utility(Probability alpha, AgentBelief mu0, SampleCount n,
               const EconomicInstance& inst);

// du/dn on the real relaxation; defined only for mu0 > mu_b.
double utility_slope(Probability alpha, AgentBelief mu0, double n,
                     const EconomicInstance& inst);

// Concave/convex split of u(n) over [n_min, n_max]; requires mu0 > mu_b.
CurvatureRegions curvature_regions(Probability alpha, AgentBelief mu0,
                                   const EconomicInstance& inst);

// Best participating trial size, found in O(log n_max) utility evaluations:
// the smallest-trial shortcut when mu0 <= mu_b, otherwise a bisection on the
// forward difference inside each concave region plus the endpoints of each
// convex region. Ties go to the smaller n.
OptimalTrial optimal_trial(Probability alpha, AgentBelief mu0,
                           const EconomicInstance& inst);

// optimal_trial followed by the participation decision; zero utility counts
// as participating.
BestResponse best_response(Probability alpha, AgentBelief mu0,
                           const EconomicInstance& inst);

// Exhaustive scan of {0} and [n_min, n_max]; reference for best_response.
// Throws RefusalError when n_max - n_min exceeds kBruteForceMaxRange.
inline constexpr SampleCount kBruteForceMaxRange = 1000000;
BestResponse best_response_bruteforce(Probability alpha, AgentBelief mu0,
                                      const EconomicInstance& inst);

}  // namespace strathyp

#endif  // STRATHYP_AGENT_MODEL_HPP_
