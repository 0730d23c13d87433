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

#ifndef STRATHYP_SPECIAL_FUNCTIONS_HPP_
#define STRATHYP_SPECIAL_FUNCTIONS_HPP_

#include <cstdint>

namespace strathyp {

// A real number in [0, 1]. Kept as a plain double; operations that accept one
// validate it and throw DomainError when it is out of range.
using Probability = double;

// Standard normal density.
double std_normal_pdf(double z);

// Standard normal CDF. Throws DomainError for non-finite z.
Probability std_normal_cdf(double z);

// Upper tail 1 - CDF, evaluated without cancellation for large z.
Probability std_normal_sf(double z);

// Inverse of std_normal_cdf on the open interval (0, 1). An Acklam rational
// approximation refined by one Newton step against std_normal_cdf.
double std_normal_quantile(Probability p);

// P[X >= k] for X ~ Binomial(n, p), accumulated in log space so that it stays
// finite for n up to 10^6. Used as the exact reference for the normal
// approximation of the critical region.
Probability binomial_tail(std::int64_t n, std::int64_t k, Probability p);

// Distribution of agent effectiveness over a support [lo, hi] inside (0, 1).
class EffectivenessPrior {
 public:
  virtual ~EffectivenessPrior() = default;

  virtual double pdf(double mu) const = 0;
  virtual Probability cdf(double mu) const = 0;
  virtual double lo() const = 0;
  virtual double hi() const = 0;
};

// Normal(mean, sd^2) restricted to [lo, hi] and renormalised.
class TruncatedNormalPrior final : public EffectivenessPrior {
 public:
  // Throws ValidationError unless sd > 0 and 0 < lo < hi < 1.
  TruncatedNormalPrior(double mean, double sd, double lo, double hi);

  double pdf(double mu) const override;
  Probability cdf(double mu) const override;
  double lo() const override { return lo_; }
  double hi() const override { return hi_; }

  double mean() const { return mean_; }
  double sd() const { return sd_; }

 private:
  double mean_;
  double sd_;
  double lo_;
  double hi_;
  double mass_;  // parent-normal probability of [lo, hi]
};

}  // namespace strathyp

#endif  // STRATHYP_SPECIAL_FUNCTIONS_HPP_
