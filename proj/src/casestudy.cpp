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

#include "strathyp/casestudy.hpp"

#include <cmath>
#include <cstdint>
#include <fstream>
#include <initializer_list>
#include <iostream>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "parallel.hpp"
#include "strathyp/errors.hpp"

namespace strathyp::casestudy {
namespace {

using nlohmann::json;

// Walks a config document and records every problem instead of stopping at
// the first one.
class Reader {
 public:
  void issue(const std::string& path, const std::string& problem) {
    issues_.push_back(path + ": " + problem);
  }

  bool ok() const { return issues_.empty(); }

  std::string report() const {
    std::string text = "invalid config:";
    for (const auto& line : issues_) text += "\n  " + line;
    return text;
  }

  // Flags every key of `node` that is not in `allowed`.
  void reject_unknown(const json& node, const std::string& path,
                      std::initializer_list<const char*> allowed) {
    for (const auto& item : node.items()) {
      bool known = false;
      for (const char* key : allowed) known = known || item.key() == key;
      if (!known) issue(Join(path, item.key()), "unknown key");
    }
  }

  bool object(const json& node, const std::string& path) {
    if (node.is_object()) return true;
    issue(path, "must be an object");
    return false;
  }

  std::optional<double> number(const json& parent, const std::string& path,
                               const char* key, bool required) {
    const std::string at = Join(path, key);
    if (!parent.contains(key)) {
      if (required) issue(at, "is required");
      return std::nullopt;
    }
    const json& node = parent.at(key);
    if (!node.is_number() || !std::isfinite(node.get<double>())) {
      issue(at, "must be a finite number");
      return std::nullopt;
    }
    return node.get<double>();
  }

  std::optional<std::int64_t> integer(const json& parent, const std::string& path,
                                      const char* key, bool required) {
    const std::string at = Join(path, key);
    if (!parent.contains(key)) {
      if (required) issue(at, "is required");
      return std::nullopt;
    }
    const json& node = parent.at(key);
    if (!node.is_number_integer()) {
      issue(at, "must be an integer");
      return std::nullopt;
    }
    return node.get<std::int64_t>();
  }

  std::optional<std::string> string(const json& parent, const std::string& path,
                                    const char* key) {
    if (!parent.contains(key)) return std::nullopt;
    const json& node = parent.at(key);
    if (!node.is_string()) {
      issue(Join(path, key), "must be a string");
      return std::nullopt;
    }
    return node.get<std::string>();
  }

  static std::string Join(const std::string& path, const std::string& key) {
    return path.empty() ? key : path + "." + key;
  }

 private:
  std::vector<std::string> issues_;
};

void ReadInstance(Reader& r, const json& node, RunConfig& config) {
  const std::string path = "instance";
  if (!r.object(node, path)) return;
  r.reject_unknown(node, path, {"R", "c0", "c", "mu_b", "n_min", "n_max", "units"});
  EconomicInstance& inst = config.instance;
  if (auto v = r.number(node, path, "R", true)) {
    if (*v > 0.0) inst.revenue = *v; else r.issue("instance.R", "must be positive");
  }
  if (auto v = r.number(node, path, "c0", true)) {
    if (*v >= 0.0) inst.fixed_cost = *v; else r.issue("instance.c0", "must be non-negative");
  }
  if (auto v = r.number(node, path, "c", true)) {
    if (*v >= 0.0) inst.cost_per_sample = *v; else r.issue("instance.c", "must be non-negative");
  }
  if (auto v = r.number(node, path, "mu_b", true)) {
    if (*v >= kBeliefClamp && *v <= 1.0 - kBeliefClamp) {
      inst.mu_b = *v;
    } else {
      r.issue("instance.mu_b", "must lie in (0, 1)");
    }
  }
  const auto n_min = r.integer(node, path, "n_min", false);
  const auto n_max = r.integer(node, path, "n_max", false);
  if (n_min) {
    if (*n_min >= 1) inst.n_min = *n_min; else r.issue("instance.n_min", "must be at least 1");
  }
  if (n_max) {
    if (*n_max >= inst.n_min) inst.n_max = *n_max; else r.issue("instance.n_max", "must be >= n_min");
  }
  if (auto units = r.string(node, path, "units")) config.units = *units;
}

void ReadPrior(Reader& r, const json& node, RunConfig& config) {
  const std::string path = "prior";
  if (!r.object(node, path)) return;
  r.reject_unknown(node, path, {"family", "mean", "sd", "lo", "hi"});
  if (auto family = r.string(node, path, "family")) {
    if (*family != "truncated_normal") {
      r.issue("prior.family", "only \"truncated_normal\" is supported");
    }
  }
  const auto mean = r.number(node, path, "mean", true);
  const auto sd = r.number(node, path, "sd", true);
  const auto lo = r.number(node, path, "lo", true);
  const auto hi = r.number(node, path, "hi", true);
  bool valid = mean && sd && lo && hi;
  if (sd && !(*sd > 0.0)) {
    r.issue("prior.sd", "must be positive");
    valid = false;
  }
  if (lo && !(*lo > 0.0 && *lo < 1.0)) {
    r.issue("prior.lo", "must lie in (0, 1)");
    valid = false;
  }
  if (hi && !(*hi > 0.0 && *hi < 1.0)) {
    r.issue("prior.hi", "must lie in (0, 1)");
    valid = false;
  }
  if (lo && hi && !(*hi > *lo)) {
    r.issue("prior.hi", "must be greater than prior.lo");
    valid = false;
  }
  if (valid) config.prior = PriorSpec{*mean, *sd, *lo, *hi};
}

void ReadWeights(Reader& r, const json& node, RunConfig& config) {
  const std::string path = "weights";
  if (!r.object(node, path)) return;
  r.reject_unknown(node, path, {"lambda_fp", "lambda_fn"});
  LossWeights& w = config.weights;
  if (auto v = r.number(node, path, "lambda_fp", false)) {
    if (*v >= 0.0) w.lambda_fp = *v; else r.issue("weights.lambda_fp", "must be non-negative");
  }
  if (auto v = r.number(node, path, "lambda_fn", false)) {
    if (*v >= 0.0) w.lambda_fn = *v; else r.issue("weights.lambda_fn", "must be non-negative");
  }
  if (w.lambda_fp == 0.0 && w.lambda_fn == 0.0) {
    r.issue(path, "lambda_fp and lambda_fn cannot both be zero");
  }
}

void ReadQuadrature(Reader& r, const json& node, RunConfig& config) {
  const std::string path = "quadrature";
  if (!r.object(node, path)) return;
  r.reject_unknown(node, path, {"panels"});
  if (auto panels = r.integer(node, path, "panels", false)) {
    if (*panels >= 10 && *panels % 2 == 0 && *panels <= std::numeric_limits<int>::max()) {
      config.quadrature.panels = static_cast<int>(*panels);
    } else {
      r.issue("quadrature.panels", "must be even and at least 10");
    }
  }
}

// `open_unit` restricts values to (0, 1); otherwise they must be positive.
std::optional<std::vector<double>> ReadGrid(Reader& r, const json& node,
                                            const std::string& path, bool open_unit) {
  if (!r.object(node, path)) return std::nullopt;
  std::vector<double> values;
  if (node.contains("values")) {
    r.reject_unknown(node, path, {"values"});
    const json& list = node.at("values");
    if (!list.is_array() || list.empty()) {
      r.issue(path + ".values", "must be a non-empty array of numbers");
      return std::nullopt;
    }
    for (std::size_t i = 0; i < list.size(); ++i) {
      if (!list[i].is_number()) {
        r.issue(path + ".values[" + std::to_string(i) + "]", "must be a number");
        return std::nullopt;
      }
      values.push_back(list[i].get<double>());
    }
  } else {
    r.reject_unknown(node, path, {"spacing", "lo", "hi", "points"});
    std::string spacing = "linear";
    if (auto s = r.string(node, path, "spacing")) spacing = *s;
    if (spacing != "linear" && spacing != "log") {
      r.issue(path + ".spacing", "must be \"linear\" or \"log\"");
      return std::nullopt;
    }
    const auto lo = r.number(node, path, "lo", true);
    const auto hi = r.number(node, path, "hi", true);
    const auto points = r.integer(node, path, "points", true);
    if (!lo || !hi || !points) return std::nullopt;
    if (*points < 2 || *points > 1000000) {
      r.issue(path + ".points", "must be between 2 and 1000000");
      return std::nullopt;
    }
    if (!(*hi > *lo)) {
      r.issue(path + ".hi", "must be greater than " + path + ".lo");
      return std::nullopt;
    }
    if (spacing == "log" && !(*lo > 0.0)) {
      r.issue(path + ".lo", "must be positive for log spacing");
      return std::nullopt;
    }
    const int n = static_cast<int>(*points);
    values = spacing == "log" ? log_grid(*lo, *hi, n) : linear_grid(*lo, *hi, n);
  }
  for (std::size_t i = 0; i < values.size(); ++i) {
    const double v = values[i];
    const bool in_range = open_unit ? (v > 0.0 && v < 1.0) : v > 0.0;
    if (!std::isfinite(v) || !in_range) {
      r.issue(path, open_unit ? "values must lie in (0, 1)" : "values must be positive");
      return std::nullopt;
    }
    if (i > 0 && !(v > values[i - 1])) {
      r.issue(path, "values must be strictly increasing");
      return std::nullopt;
    }
  }
  return values;
}

void ReadGrids(Reader& r, const json& node, RunConfig& config) {
  const std::string path = "grids";
  if (!r.object(node, path)) return;
  r.reject_unknown(node, path, {"alpha", "R", "c0"});
  if (node.contains("alpha")) config.alpha_grid = ReadGrid(r, node.at("alpha"), "grids.alpha", true);
  if (node.contains("R")) config.revenue_grid = ReadGrid(r, node.at("R"), "grids.R", false);
  if (node.contains("c0")) config.fixed_cost_grid = ReadGrid(r, node.at("c0"), "grids.c0", false);
}

void ReadOutput(Reader& r, const json& node, RunConfig& config) {
  const std::string path = "output";
  if (!r.object(node, path)) return;
  r.reject_unknown(node, path, {"loss_sweep", "heatmap"});
  if (auto s = r.string(node, path, "loss_sweep")) config.loss_sweep_output = *s;
  if (auto s = r.string(node, path, "heatmap")) config.heatmap_output = *s;
}

}  // namespace

RunConfig parse_config(std::string_view text, const std::string& source) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(source + ": not valid JSON: " + e.what());
  }
  Reader r;
  RunConfig config;
  if (!doc.is_object()) {
    r.issue("(root)", "must be an object");
    throw ValidationError(r.report());
  }
  r.reject_unknown(doc, "",
                   {"instance", "prior", "weights", "quadrature", "grids", "output"});
  if (doc.contains("instance")) {
    ReadInstance(r, doc.at("instance"), config);
  } else {
    r.issue("instance", "is required");
  }
  if (doc.contains("prior")) ReadPrior(r, doc.at("prior"), config);
  if (doc.contains("weights")) ReadWeights(r, doc.at("weights"), config);
  if (doc.contains("quadrature")) ReadQuadrature(r, doc.at("quadrature"), config);
  if (doc.contains("grids")) ReadGrids(r, doc.at("grids"), config);
  if (doc.contains("output")) ReadOutput(r, doc.at("output"), config);
  if (!r.ok()) throw ValidationError(r.report());
  return config;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open config file '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config(text.str(), path);
}

const char* command_name(Command command) {
  switch (command) {
    case Command::kBestResponse: return "best-response";
    case Command::kThreshold: return "threshold";
    case Command::kCriticalAlpha: return "critical-alpha";
    case Command::kLossSweep: return "loss-sweep";
    case Command::kHeatmap: return "heatmap";
  }
  return "unknown";
}

void require_for(const RunConfig& config, Command command) {
  std::vector<std::string> missing;
  if (command == Command::kLossSweep) {
    if (!config.prior) missing.push_back("prior");
    if (!config.alpha_grid) missing.push_back("grids.alpha");
  }
  if (command == Command::kHeatmap) {
    if (!config.revenue_grid) missing.push_back("grids.R");
    if (!config.fixed_cost_grid) missing.push_back("grids.c0");
  }
  if (missing.empty()) return;
  std::string text = std::string(command_name(command)) + " requires";
  for (std::size_t i = 0; i < missing.size(); ++i) {
    text += (i ? ", '" : " '") + missing[i] + "'";
  }
  throw ValidationError(text + " in the config");
}

SweepTable run_loss_sweep(const RunConfig& config, bool with_flags) {
  require_for(config, Command::kLossSweep);
  config.instance.validate();
  const TruncatedNormalPrior prior = config.prior->build();
  const SweepTable full =
      sweep_alpha(config.instance, prior, config.weights, config.quadrature,
                  *config.alpha_grid, default_probe_beliefs(config.instance, prior));
  std::vector<std::string> names = loss_sweep_columns();
  if (with_flags) names.push_back("flags");
  return full.select(names);
}

SweepTable run_heatmap(const RunConfig& config, double eps) {
  require_for(config, Command::kHeatmap);
  config.instance.validate();
  const std::vector<double>& revenues = *config.revenue_grid;
  const std::vector<double>& fixed_costs = *config.fixed_cost_grid;
  const std::size_t cells = revenues.size() * fixed_costs.size();
  std::vector<std::vector<double>> rows(cells);
  internal::ParallelFor(cells, [&](std::size_t i) {
    EconomicInstance inst = config.instance;
    inst.revenue = revenues[i / fixed_costs.size()];
    inst.fixed_cost = fixed_costs[i % fixed_costs.size()];
    const CriticalAlpha result = critical_alpha(inst, eps);
    const bool clamped = result.status != AlphaHatStatus::kInterior;
    rows[i] = {inst.revenue, inst.fixed_cost, result.alpha_hat, clamped ? 1.0 : 0.0,
               result.alpha_hat <= 0.05 ? 1.0 : 0.0};
  });
  SweepTable table(heatmap_columns());
  for (auto& row : rows) table.add_row(std::move(row));
  return table;
}

CriticalAlphaReport run_critical_alpha(const EconomicInstance& instance, double eps) {
  instance.validate();
  CriticalAlphaReport report;
  report.result = critical_alpha(instance, eps);
  report.closed_form = critical_alpha_closed_form(instance);
  report.discrepancy = std::abs(report.result.alpha_hat - report.closed_form);
  return report;
}

SweepTable critical_alpha_table(const CriticalAlphaReport& report) {
  SweepTable table(critical_alpha_columns());
  const bool clamped = report.result.status != AlphaHatStatus::kInterior;
  table.add_row({report.result.alpha_hat, report.closed_form, report.discrepancy,
                 clamped ? 1.0 : 0.0});
  return table;
}

std::string gnuplot_script(Command command, const std::string& csv_path) {
  std::string s = "set datafile separator ','\nset key autotitle columnhead\n";
  if (command == Command::kLossSweep) {
    s += "set logscale x\nset xlabel 'alpha'\nset ylabel 'loss'\n";
    s += "plot for [col in 'fp_particip fn_particip fn_abstain total_loss'] '" +
         csv_path + "' using 'alpha':col with lines title col\n";
  } else if (command == Command::kHeatmap) {
    s += "set view map\nset xlabel 'R'\nset ylabel 'c0'\nset cblabel 'alpha_hat'\n";
    s += "splot '" + csv_path + "' using 1:2:3 with points pointtype 5 palette notitle, \\\n";
    s += "      '" + csv_path +
         "' using 1:2:($5 > 0 ? $3 : 1/0) with points pointtype 1 lc rgb 'black' "
         "title 'alpha_hat <= 0.05'\n";
  } else {
    throw ValidationError(std::string("no plot is defined for ") + command_name(command));
  }
  return s;
}

void write_table(const SweepTable& table, const std::string& path) {
  if (path.empty()) {
    table.write_csv(std::cout);
    std::cout.flush();
    if (!std::cout) throw IoError("cannot write to standard output");
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  table.write_csv(out);
  out.close();
  if (!out) throw IoError("failed while writing '" + path + "'");
}

}  // namespace strathyp::casestudy
