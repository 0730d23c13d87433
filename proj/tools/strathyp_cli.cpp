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

// strathyp: command-line front end for the approval-game solvers.
//
//   strathyp best-response --alpha 0.05 --mu0 0.6 --R 1 --c0 0.05 --c 0.002
//   strathyp critical-alpha --config presets/cardiovascular.json
//   strathyp loss-sweep --config presets/fn-curves-0.62.json --output loss.csv
//   strathyp heatmap --config presets/oncology.json --output heat.csv
//
// Exit codes: 0 success, 2 usage or validation, 3 numeric domain, 4 I/O.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "strathyp/casestudy.hpp"
#include "strathyp/errors.hpp"

namespace {

using namespace strathyp;
using namespace strathyp::casestudy;

constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;
constexpr int kExitIo = 4;

struct Options {
  std::string config_path;
  std::string output_path;
  bool quiet = false;
  double eps = kDefaultSearchEps;

  std::optional<double> revenue;
  std::optional<double> fixed_cost;
  std::optional<double> cost_per_sample;
  std::optional<double> mu_b;
  std::optional<SampleCount> n_min;
  std::optional<SampleCount> n_max;

  double alpha = 0.0;
  double mu0 = 0.0;
  bool with_flags = false;
  std::string gnuplot_path;
};

RunConfig ResolveConfig(const Options& opt) {
  RunConfig config;
  if (!opt.config_path.empty()) config = load_config(opt.config_path);
  EconomicInstance& inst = config.instance;
  if (opt.revenue) inst.revenue = *opt.revenue;
  if (opt.fixed_cost) inst.fixed_cost = *opt.fixed_cost;
  if (opt.cost_per_sample) inst.cost_per_sample = *opt.cost_per_sample;
  if (opt.mu_b) inst.mu_b = *opt.mu_b;
  if (opt.n_min) inst.n_min = *opt.n_min;
  if (opt.n_max) inst.n_max = *opt.n_max;
  inst.validate();
  return config;
}

void Line(const char* key, double value) { std::printf("%s: %.6g\n", key, value); }

const char* Describe(ThresholdStatus status) {
  switch (status) {
    case ThresholdStatus::kInterior: return "interior";
    case ThresholdStatus::kAllParticipate: return "all_participate";
    case ThresholdStatus::kNoneParticipate: return "none_participate";
  }
  return "unknown";
}

const char* Describe(AlphaHatStatus status) {
  switch (status) {
    case AlphaHatStatus::kInterior: return "interior";
    case AlphaHatStatus::kClampedHigh: return "clamped_high";
    case AlphaHatStatus::kClampedLow: return "clamped_low";
  }
  return "unknown";
}

void Note(const Options& opt, const std::string& text) {
  if (!opt.quiet) std::cerr << text << '\n';
}

void WritePlot(const Options& opt, Command command, const std::string& csv_path) {
  if (opt.gnuplot_path.empty()) return;
  std::ofstream out(opt.gnuplot_path, std::ios::binary | std::ios::trunc);
  out << gnuplot_script(command, csv_path.empty() ? "data.csv" : csv_path);
  if (!out) throw IoError("cannot write '" + opt.gnuplot_path + "'");
  Note(opt, "wrote " + opt.gnuplot_path);
}

int RunBestResponse(const Options& opt) {
  const RunConfig config = ResolveConfig(opt);
  const BestResponse br = best_response(opt.alpha, AgentBelief(opt.mu0), config.instance);
  std::printf("decision: %s\n", br.participates ? "participate" : "abstain");
  std::printf("participates: %s\n", br.participates ? "true" : "false");
  std::printf("n_star: %lld\n", static_cast<long long>(br.n_star));
  Line("pass_prob", br.pass_prob);
  Line("utility", br.utility);
  return 0;
}

int RunThreshold(const Options& opt) {
  const RunConfig config = ResolveConfig(opt);
  const ParticipationThreshold t = participation_threshold(opt.alpha, config.instance, opt.eps);
  Line("mu_tau", t.mu_tau);
  Line("epsilon", t.epsilon);
  std::printf("status: %s\n", Describe(t.status));
  std::printf("best_response_calls: %d\n", t.best_response_calls);
  return 0;
}

int RunCriticalAlpha(const Options& opt) {
  const RunConfig config = ResolveConfig(opt);
  const CriticalAlphaReport report = run_critical_alpha(config.instance, opt.eps);
  if (!opt.quiet) {
    Line("alpha_hat", report.result.alpha_hat);
    Line("closed_form", report.closed_form);
    Line("discrepancy", report.discrepancy);
    std::printf("status: %s\n", Describe(report.result.status));
    std::printf("clamped: %s\n",
                report.result.status == AlphaHatStatus::kInterior ? "no" : "yes");
    std::printf("threshold_calls: %d\n", report.result.threshold_calls);
    std::fflush(stdout);
  }
  write_table(critical_alpha_table(report), opt.output_path);
  return 0;
}

int RunLossSweep(const Options& opt) {
  const RunConfig config = ResolveConfig(opt);
  const std::string path = opt.output_path.empty() ? config.loss_sweep_output : opt.output_path;
  const SweepTable table = run_loss_sweep(config, opt.with_flags);
  write_table(table, path);
  if (!path.empty()) Note(opt, "wrote " + std::to_string(table.size()) + " rows to " + path);
  WritePlot(opt, Command::kLossSweep, path);
  return 0;
}

int RunHeatmap(const Options& opt) {
  const RunConfig config = ResolveConfig(opt);
  const std::string path = opt.output_path.empty() ? config.heatmap_output : opt.output_path;
  const SweepTable table = run_heatmap(config, opt.eps);
  write_table(table, path);
  if (!path.empty()) Note(opt, "wrote " + std::to_string(table.size()) + " rows to " + path);
  WritePlot(opt, Command::kHeatmap, path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  CLI::App app{"strathyp: hypothesis-testing thresholds under strategic agents"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--config", opt.config_path, "JSON run configuration");
  app.add_option("--output", opt.output_path, "CSV output path (default: stdout)");
  app.add_flag("--quiet", opt.quiet, "Suppress informational messages");
  app.add_option("--eps", opt.eps, "Bisection tolerance for threshold searches")
      ->check(CLI::Range(1e-15, 0.5));
  app.add_option("--R", opt.revenue, "Revenue on approval");
  app.add_option("--c0", opt.fixed_cost, "Fixed trial cost");
  app.add_option("--c", opt.cost_per_sample, "Cost per sample");
  app.add_option("--mu-b", opt.mu_b, "Baseline effectiveness");
  app.add_option("--n-min", opt.n_min, "Smallest trial size");
  app.add_option("--n-max", opt.n_max, "Largest trial size");

  auto* best = app.add_subcommand("best-response", "Agent best response at one belief");
  best->add_option("--alpha", opt.alpha, "p-value threshold")->required();
  best->add_option("--mu0", opt.mu0, "Agent belief")->required();

  auto* threshold = app.add_subcommand("threshold", "Participation threshold mu_tau(alpha)");
  threshold->add_option("--alpha", opt.alpha, "p-value threshold")->required();

  auto* critical = app.add_subcommand("critical-alpha", "Critical p-value alpha_hat");

  auto* sweep = app.add_subcommand("loss-sweep", "Loss components over the alpha grid");
  sweep->add_flag("--with-flags", opt.with_flags, "Append the loss flag bitmask column");
  sweep->add_option("--gnuplot", opt.gnuplot_path, "Also write a gnuplot script");

  auto* heat = app.add_subcommand("heatmap", "alpha_hat over the R x c0 grid");
  heat->add_option("--gnuplot", opt.gnuplot_path, "Also write a gnuplot script");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (best->parsed()) return RunBestResponse(opt);
    if (threshold->parsed()) return RunThreshold(opt);
    if (critical->parsed()) return RunCriticalAlpha(opt);
    if (sweep->parsed()) return RunLossSweep(opt);
    if (heat->parsed()) return RunHeatmap(opt);
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const RefusalError& e) {
    std::cerr << "refused: " << e.what() << '\n';
    return kExitDomain;
  } catch (const IoError& e) {
    std::cerr << "I/O error: " << e.what() << '\n';
    return kExitIo;
  }
  return kExitUsage;
}
