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

// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "strathyp/agent_model.hpp"
#include "strathyp/casestudy.hpp"
#include "strathyp/principal_loss.hpp"
#include "strathyp/special_functions.hpp"
#include "strathyp/threshold_solver.hpp"

using namespace strathyp;

namespace {

using Clock = std::chrono::steady_clock;

double Seconds(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string Preset(const std::string& name) {
  return std::string(STRATHYP_PRESET_DIR) + "/" + name + ".json";
}

const char* const kPresets[] = {"oncology",       "cardiovascular", "vaccine",
                                "fn-curves-0.53", "fn-curves-0.62", "fn-curves-0.67"};

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    pass = false;
    detail += (detail.empty() ? "" : "; ") + why;
  }
  void note(const std::string& text) { detail += (detail.empty() ? "" : "; ") + text; }
};

std::string Fmt(const char* format, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, format, a, b, c);
  return buf;
}

EconomicInstance Instance(double revenue, double fixed_cost, double cost_per_sample) {
  EconomicInstance inst;
  inst.revenue = revenue;
  inst.fixed_cost = fixed_cost;
  inst.cost_per_sample = cost_per_sample;
  return inst;
}

EconomicInstance RandomInstance(std::mt19937_64& rng) {
  EconomicInstance inst;
  inst.mu_b = oracle::Uniform(rng, 0.2, 0.8);
  inst.revenue = oracle::Uniform(rng, 0.1, 100.0);
  inst.fixed_cost = oracle::Uniform(rng, 0.0, 5.0);
  inst.cost_per_sample = oracle::Uniform(rng, 0.0, 0.1);
  inst.n_min = 1 + static_cast<SampleCount>(oracle::Uniform(rng, 0.0, 20.0));
  inst.n_max = inst.n_min + static_cast<SampleCount>(oracle::Uniform(rng, 0.0, 2000.0 - inst.n_min));
  return inst;
}

// An instance from the same ranges whose critical alpha lies well inside (0, 1).
EconomicInstance RandomFeasible(std::mt19937_64& rng) {
  for (;;) {
    EconomicInstance inst = RandomInstance(rng);
    const double closed =
        (inst.fixed_cost + inst.cost_per_sample * inst.n_min) / inst.revenue;
    if (closed > 1e-3 && closed < 0.5) return inst;
  }
}

Outcome BestResponseOracle() {
  Outcome out;
  auto rng = oracle::Rng(1001);
  const auto start = Clock::now();
  double worst = 0.0;
  int mismatches = 0;
  const int kInstances = 500;
  for (int i = 0; i < kInstances; ++i) {
    const EconomicInstance inst = RandomInstance(rng);
    const double alpha = oracle::Uniform(rng, 1e-3, 0.5);
    const double mu0 = oracle::Uniform(rng, 0.05, 0.95);
    long double best = 0.0L;
    for (SampleCount n = inst.n_min; n <= inst.n_max; ++n) {
      best = std::max(best, oracle::Utility(alpha, mu0, n, inst));
    }
    const BestResponse br = best_response(alpha, AgentBelief(mu0), inst);
    const double gap = std::abs(static_cast<double>(best) - br.utility);
    worst = std::max(worst, gap / std::max(1.0, inst.revenue));
    if (gap > 1e-9 * std::max(1.0, inst.revenue)) ++mismatches;
  }
  const double elapsed = Seconds(start);
  out.note(Fmt("%.0f instances, worst scaled gap %.3g, %.1f s", kInstances, worst, elapsed));
  if (mismatches > 0) out.fail(Fmt("%.0f instances outside 1e-9*max(1,R)", mismatches));
  if (elapsed >= 60.0) out.fail("runtime not below 60 s");
  return out;
}

Outcome CriticalAlphaClosedForm() {
  Outcome out;
  auto rng = oracle::Rng(2002);
  double worst = 0.0;
  for (int i = 0; i < 200; ++i) {
    const EconomicInstance inst = RandomFeasible(rng);
    const double closed =
        (inst.fixed_cost + inst.cost_per_sample * inst.n_min) / inst.revenue;
    worst = std::max(worst, std::abs(critical_alpha(inst).alpha_hat - closed));
  }
  out.note(Fmt("worst |alpha_hat - closed form| %.3g over 200 instances", worst));
  if (worst > 2e-6) out.fail("closed-form gap above 2e-6");

  const casestudy::RunConfig cardio = casestudy::load_config(Preset("cardiovascular"));
  const double a = critical_alpha(cardio.instance).alpha_hat;
  out.note(Fmt("cardiovascular alpha_hat %.7f", a));
  if (std::abs(a - 0.03965) > 1e-4) out.fail("cardiovascular alpha_hat outside 0.03965 +/- 1e-4");
  return out;
}

Outcome OncologyBand() {
  Outcome out;
  const EconomicInstance inst = Instance(5000.0, 648.0, 0.136);
  const double a = critical_alpha(inst).alpha_hat;
  out.note(Fmt("oncology alpha_hat %.6f", a));
  if (std::abs(a - 0.1296) > 1e-3) out.fail("alpha_hat outside 0.1296 +/- 1e-3");
  if (!(a > 0.1 && a < 0.2)) out.fail("alpha_hat outside (0.1, 0.2)");

  double lo = 5000.0;
  double hi = 50000.0;
  auto above = [&](double revenue) {
    return critical_alpha(Instance(revenue, 648.0, 0.136)).alpha_hat > 0.05;
  };
  if (!above(lo) || above(hi)) {
    out.fail("0.05 crossing not bracketed");
    return out;
  }
  while (hi - lo > 0.01) {
    const double mid = 0.5 * (lo + hi);
    (above(mid) ? lo : hi) = mid;
  }
  const double crossing = 0.5 * (lo + hi);
  out.note(Fmt("alpha_hat = 0.05 crossing at R = %.2f", crossing));
  if (std::abs(crossing - 12963.0) > 1.0) out.fail("crossing outside 12963 +/- 1");
  return out;
}

// Counts grid steps that violate a monotone direction by more than slack.
int Violations(const std::vector<double>& v, std::size_t begin, std::size_t end,
               int direction, double slack, double* worst) {
  int count = 0;
  for (std::size_t i = begin + 1; i < end; ++i) {
    const double step = direction * (v[i] - v[i - 1]);
    if (step < -slack) {
      ++count;
      *worst = std::max(*worst, -step);
    }
  }
  return count;
}

Outcome Monotonicity() {
  Outcome out;
  const double slack = 2 * kQuadratureTolerance;
  auto rng = oracle::Rng(4004);
  const auto start = Clock::now();
  const std::vector<double> grid = log_grid(1e-4, 0.9, 400);
  struct Check {
    const char* name;
    int violations = 0;
    double worst = 0.0;
  };
  Check mu_tau{"mu_tau non-increasing"};
  Check pass{"Pass non-decreasing for mu0 >= mu_b"};
  Check fp_below{"FP = 0 below alpha_hat"};
  Check fp_above{"FP non-decreasing above alpha_hat"};
  Check fn{"total FN non-increasing on each side"};
  Check fn_abstain{"FN_abstain = 0 above alpha_hat"};
  Check optimum{"optimal alpha >= alpha_hat"};

  for (int i = 0; i < 20; ++i) {
    EconomicInstance inst = RandomFeasible(rng);
    const double mean = oracle::Uniform(rng, inst.mu_b - 0.1, inst.mu_b + 0.2);
    const double sd = oracle::Uniform(rng, 0.02, 0.1);
    const TruncatedNormalPrior prior(mean, sd, std::max(0.01, inst.mu_b - 0.2),
                                     std::min(0.99, inst.mu_b + 0.25));
    const LossWeights weights;
    const QuadratureSpec quad;
    const double alpha_hat = critical_alpha(inst).alpha_hat;
    const SweepTable t = sweep_alpha(inst, prior, weights, quad, grid,
                                     default_probe_beliefs(inst, prior));
    const auto alpha = t.column("alpha");
    const auto split = static_cast<std::size_t>(
        std::lower_bound(alpha.begin(), alpha.end(), alpha_hat) - alpha.begin());

    mu_tau.violations += Violations(t.column("mu_tau"), 0, t.size(), -1, slack, &mu_tau.worst);
    for (const char* probe : {"pass_probe_1", "pass_probe_2", "pass_probe_3"}) {
      pass.violations += Violations(t.column(probe), 0, t.size(), 1, slack, &pass.worst);
    }
    const auto fp = t.column("fp_particip");
    for (std::size_t k = 0; k < split; ++k) {
      if (fp[k] != 0.0) {
        ++fp_below.violations;
        fp_below.worst = std::max(fp_below.worst, fp[k]);
      }
    }
    fp_above.violations += Violations(fp, split, t.size(), 1, slack, &fp_above.worst);
    const auto fn_total = t.column("fn_total");
    fn.violations += Violations(fn_total, 0, split, -1, slack, &fn.worst);
    fn.violations += Violations(fn_total, split, t.size(), -1, slack, &fn.worst);
    const auto fna = t.column("fn_abstain");
    for (std::size_t k = split; k < t.size(); ++k) {
      if (fna[k] > slack) {
        ++fn_abstain.violations;
        fn_abstain.worst = std::max(fn_abstain.worst, fna[k]);
      }
    }
    const OptimalAlpha best = optimal_alpha(inst, prior, weights, quad, 400);
    if (best.alpha < alpha_hat) {
      ++optimum.violations;
      optimum.worst = std::max(optimum.worst, alpha_hat - best.alpha);
    }
  }
  const double elapsed = Seconds(start);
  for (const Check* c : {&mu_tau, &pass, &fp_below, &fp_above, &fn, &fn_abstain, &optimum}) {
    if (c->violations > 0) {
      out.fail(std::string(c->name) +
               Fmt(": %.0f violations, worst %.3g", c->violations, c->worst));
    }
  }
  out.note(Fmt("20 instances, %.1f s", elapsed));
  if (elapsed >= 300.0) out.fail("runtime not below 5 min");
  return out;
}

Outcome FnCurves() {
  Outcome out;
  const double slack = 2 * kQuadratureTolerance;
  for (const char* name : {"fn-curves-0.53", "fn-curves-0.62", "fn-curves-0.67"}) {
    const casestudy::RunConfig config = casestudy::load_config(Preset(name));
    const auto fnp = casestudy::run_loss_sweep(config).column("fn_particip");
    bool rises = false;
    bool falls_after_rise = false;
    double peak_alpha = 0.0;
    for (std::size_t i = 1; i < fnp.size(); ++i) {
      if (fnp[i] > fnp[i - 1] + slack) {
        rises = true;
        peak_alpha = (*config.alpha_grid)[i];
      }
      if (rises && fnp[i] < fnp[i - 1] - slack) falls_after_rise = true;
    }
    const bool want_rise = std::string(name) != "fn-curves-0.67";
    out.note(std::string(name) + (rises ? Fmt(": rises (last rise at alpha %.3g)", peak_alpha)
                                        : ": non-increasing"));
    if (want_rise && !(rises && falls_after_rise)) out.fail(std::string(name) + " lacks an interior rise");
    if (!want_rise && rises) out.fail(std::string(name) + " is not non-increasing");
  }
  return out;
}

Outcome NormalApproximation() {
  Outcome out;
  double worst_overall = 0.0;
  int violations = 0;
  int cases = 0;
  for (SampleCount n : {50, 100, 200, 500}) {
    double worst = 0.0;
    for (double alpha : {0.01, 0.05, 0.2}) {
      for (int i = 0; i <= 40; ++i) {
        const double mu0 = 0.3 + 0.01 * i;
        for (int j = 0; j <= 40; ++j) {
          const double mu_b = 0.3 + 0.01 * j;
          const double z = critical_region(alpha, n, mu_b);
          const double exact =
              binomial_tail(n, static_cast<std::int64_t>(std::ceil(z)), mu0);
          const double gap =
              std::abs(pass_probability(alpha, AgentBelief(mu0), n, mu_b) - exact);
          worst = std::max(worst, gap);
          ++cases;
          if (gap > 0.05) ++violations;
        }
      }
    }
    out.note(Fmt("n=%.0f worst %.4f", static_cast<double>(n), worst));
    worst_overall = std::max(worst_overall, worst);
  }
  if (violations > 0) {
    out.fail(Fmt("%.0f of %.0f cases exceed 0.05 (worst %.4f)", violations, cases,
                 worst_overall));
  }
  return out;
}

Outcome SpecialFunctions() {
  Outcome out;
  double worst_roundtrip = 0.0;
  for (int e = -15; e <= -1; ++e) {
    for (double m : {1.0, 2.5, 5.0}) {
      for (double p : {m * std::pow(10.0, e), 1.0 - m * std::pow(10.0, e)}) {
        if (!(p > 0.0 && p < 1.0)) continue;
        const double back = std_normal_cdf(std_normal_quantile(p));
        worst_roundtrip = std::max(worst_roundtrip, std::abs(back - p));
      }
    }
  }
  for (double p = 0.001; p < 1.0; p += 0.001) {
    worst_roundtrip =
        std::max(worst_roundtrip, std::abs(std_normal_cdf(std_normal_quantile(p)) - p));
  }
  out.note(Fmt("worst roundtrip %.3g", worst_roundtrip));
  if (worst_roundtrip > 1e-9) out.fail("roundtrip above 1e-9");

  const double phi = std_normal_cdf(1.6448536);
  out.note(Fmt("Phi(1.6448536) = %.10f", phi));
  if (std::abs(phi - 0.95) > 1e-7) out.fail("Phi(1.6448536) outside 0.95 +/- 1e-7");

  double worst_mass = 0.0;
  const double params[][4] = {{0.53, 0.04, 0.4, 0.7}, {0.62, 0.04, 0.4, 0.7},
                              {0.67, 0.04, 0.4, 0.7}, {0.5, 0.2, 0.01, 0.99},
                              {0.75, 0.05, 0.2, 0.6}, {0.3, 0.01, 0.25, 0.35}};
  for (const auto& c : params) {
    const TruncatedNormalPrior prior(c[0], c[1], c[2], c[3]);
    const long double mass = oracle::Simpson(
        [&](long double x) { return prior.pdf(static_cast<double>(x)); }, c[2], c[3], 20000);
    worst_mass = std::max(worst_mass, std::abs(static_cast<double>(mass) - 1.0));
  }
  out.note(Fmt("worst |mass - 1| %.3g", worst_mass));
  if (worst_mass > 1e-8) out.fail("truncated-normal mass outside 1 +/- 1e-8");
  return out;
}

std::string Slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

Outcome Determinism() {
  Outcome out;
  const std::filesystem::path dir =
      std::filesystem::temp_directory_path() / "strathyp_acceptance";
  std::filesystem::create_directories(dir);
  int compared = 0;
  for (const char* name : kPresets) {
    for (const char* command : {"loss-sweep", "heatmap"}) {
      std::string runs[2];
      for (int r = 0; r < 2; ++r) {
        const std::filesystem::path csv =
            dir / (std::string(name) + "." + command + "." + std::to_string(r) + ".csv");
        std::filesystem::remove(csv);
        const std::string cmd = std::string("\"") + STRATHYP_CLI_PATH + "\" --quiet --config \"" +
                                Preset(name) + "\" --output \"" + csv.string() + "\" " + command;
        if (std::system(cmd.c_str()) != 0) {
          out.fail(std::string(command) + " failed on " + name);
          continue;
        }
        runs[r] = Slurp(csv);
      }
      if (runs[0].empty() || runs[0] != runs[1]) {
        out.fail(std::string(command) + " output differs between runs on " + name);
      }
      ++compared;
    }
  }
  std::filesystem::remove_all(dir);
  out.note(Fmt("%.0f preset/command pairs compared", compared));
  return out;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"best response matches brute force", BestResponseOracle},
      {"critical alpha closed form", CriticalAlphaClosedForm},
      {"oncology band and 0.05 crossing", OncologyBand},
      {"monotonicity suite", Monotonicity},
      {"FN_particip curve shapes", FnCurves},
      {"normal approximation within 0.05", NormalApproximation},
      {"special-function accuracy", SpecialFunctions},
      {"byte-identical CLI output", Determinism},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome outcome;
    try {
      outcome = criteria[i].second();
    } catch (const std::exception& e) {
      outcome.fail(std::string("exception: ") + e.what());
    }
    if (!outcome.pass) ++failures;
    std::printf("%s %zu %s: %s\n", outcome.pass ? "PASS" : "FAIL", i + 1, criteria[i].first,
                outcome.detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
