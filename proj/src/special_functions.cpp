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

#include "strathyp/special_functions.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "strathyp/errors.hpp"

namespace strathyp {
namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;
constexpr double kInvSqrt2Pi = 0.39894228040143267794;

// Acklam's rational approximation for the lower half of the quantile
// function, relative error below 1.2e-9 before refinement.
double AcklamLower(double p) {
  static constexpr double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                                 -2.759285104469687e+02, 1.383577518672690e+02,
                                 -3.066479806614716e+01, 2.506628277459239e+00};
  static constexpr double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                                 -1.556989798598866e+02, 6.680131188771972e+01,
                                 -1.328068155288572e+01};
  static constexpr double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                                 -2.400758277161838e+00, -2.549732539343734e+00,
                                 4.374664141464968e+00,  2.938163982698783e+00};
  static constexpr double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                                 2.445134137142996e+00, 3.754408661907416e+00};
  constexpr double kLowBreak = 0.02425;

  if (p < kLowBreak) {
    const double q = std::sqrt(-2.0 * std::log(p));
    return (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
           ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  }
  const double q = p - 0.5;
  const double r = q * q;
  return (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
         (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
}

}  // namespace

double std_normal_pdf(double z) { return kInvSqrt2Pi * std::exp(-0.5 * z * z); }

Probability std_normal_cdf(double z) {
  if (!std::isfinite(z)) {
    throw DomainError("std_normal_cdf: argument must be finite");
  }
  return 0.5 * std::erfc(-z * kInvSqrt2);
}

Probability std_normal_sf(double z) {
  if (!std::isfinite(z)) {
    throw DomainError("std_normal_sf: argument must be finite");
  }
  return 0.5 * std::erfc(z * kInvSqrt2);
}

double std_normal_quantile(Probability p) {
  if (!(p > 0.0 && p < 1.0)) {
    throw DomainError("std_normal_quantile: p must lie in (0, 1), got " +
                      std::to_string(p));
  }
  // Work on the lower tail so the Newton residual is computed without
  // cancellation, then mirror.
  const bool upper = p > 0.5;
  const double tail = upper ? 1.0 - p : p;
  double x = AcklamLower(tail);
  const double residual = std_normal_cdf(x) - tail;
  x -= residual / std_normal_pdf(x);
  return upper ? -x : x;
}

namespace {

// log sum_{i=lo..hi} C(n, i) p^i (1-p)^(n-i) for 0 < p < 1, accumulated by an
// online log-sum-exp that walks outwards from the end nearer the mode.
double LogPmfSum(std::int64_t n, std::int64_t lo, std::int64_t hi, double p) {
  const std::int64_t start = lo == 0 ? hi : lo;
  const std::int64_t kk = std::min(start, n - start);
  double log_coef = 0.0;
  for (std::int64_t j = 1; j <= kk; ++j) {
    log_coef += std::log(static_cast<double>(n - kk + j) / static_cast<double>(j));
  }
  const double log_p = std::log(p);
  const double log_q = std::log1p(-p);
  const double log_odds = log_p - log_q;
  double log_term = log_coef + static_cast<double>(start) * log_p +
                    static_cast<double>(n - start) * log_q;
  double running_max = log_term;
  double scaled_sum = 1.0;
  auto add = [&](double value) {
    if (value > running_max) {
      scaled_sum = scaled_sum * std::exp(running_max - value) + 1.0;
      running_max = value;
    } else {
      scaled_sum += std::exp(value - running_max);
    }
  };
  if (lo == 0) {
    for (std::int64_t i = hi; i > 0; --i) {
      log_term += std::log(static_cast<double>(i) / static_cast<double>(n - i + 1)) - log_odds;
      add(log_term);
    }
  } else {
    for (std::int64_t i = lo; i < hi; ++i) {
      log_term += std::log(static_cast<double>(n - i) / static_cast<double>(i + 1)) + log_odds;
      add(log_term);
    }
  }
  return running_max + std::log(scaled_sum);
}

}  // namespace

Probability binomial_tail(std::int64_t n, std::int64_t k, Probability p) {
  if (n < 0) throw DomainError("binomial_tail: n must be non-negative");
  if (!(p >= 0.0 && p <= 1.0)) {
    throw DomainError("binomial_tail: p must lie in [0, 1]");
  }
  if (k <= 0) return 1.0;
  if (k > n) return 0.0;
  if (p == 0.0) return 0.0;
  if (p == 1.0) return 1.0;

  // Sum whichever side of k is lighter, so a tail close to 1 is formed as
  // 1 minus a small, accurately summed complement.
  const bool upper = static_cast<double>(k) >= static_cast<double>(n) * p;
  const double side = upper ? LogPmfSum(n, k, n, p) : LogPmfSum(n, 0, k - 1, p);
  const double tail = upper ? std::exp(side) : -std::expm1(side);
  return std::clamp(tail, 0.0, 1.0);
}

namespace {

// Parent-normal mass of [a, b] in standardised units, avoiding the
// 1 - 1 cancellation when both ends sit in the upper tail.
double StandardMass(double a, double b) {
  if (a > 0.0) return std_normal_sf(a) - std_normal_sf(b);
  return std_normal_cdf(b) - std_normal_cdf(a);
}

}  // namespace

TruncatedNormalPrior::TruncatedNormalPrior(double mean, double sd, double lo,
                                           double hi)
    : mean_(mean), sd_(sd), lo_(lo), hi_(hi), mass_(0.0) {
  if (!std::isfinite(mean)) {
    throw ValidationError("truncated normal: mean must be finite");
  }
  if (!(sd > 0.0) || !std::isfinite(sd)) {
    throw ValidationError("truncated normal: sd must be positive");
  }
  if (!(lo > 0.0 && lo < hi && hi < 1.0)) {
    throw ValidationError("truncated normal: support must satisfy 0 < lo < hi < 1");
  }
  mass_ = StandardMass((lo - mean) / sd, (hi - mean) / sd);
  if (!(mass_ > 0.0)) {
    throw ValidationError(
        "truncated normal: support carries no mass under the parent normal");
  }
}

double TruncatedNormalPrior::pdf(double mu) const {
  if (!std::isfinite(mu)) throw DomainError("prior pdf: mu must be finite");
  if (mu < lo_ || mu > hi_) return 0.0;
  return std_normal_pdf((mu - mean_) / sd_) / (sd_ * mass_);
}

Probability TruncatedNormalPrior::cdf(double mu) const {
  if (!std::isfinite(mu)) throw DomainError("prior cdf: mu must be finite");
  if (mu <= lo_) return 0.0;
  if (mu >= hi_) return 1.0;
  const double value = StandardMass((lo_ - mean_) / sd_, (mu - mean_) / sd_) / mass_;
  return std::clamp(value, 0.0, 1.0);
}

}  // namespace strathyp
