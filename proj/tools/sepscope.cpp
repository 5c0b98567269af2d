// Copyright 2026 The Sepscope Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "sepscope/commands.hpp"
#include "sepscope/version.hpp"

namespace {

using namespace sepscope;
using nlohmann::json;

/// Parses repeatable --param k=v flags into a spec's parameter map.
void apply_params(NamedStateSpec& spec, const std::vector<std::string>& params) {
  for (const std::string& kv : params) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw ValidationError("--param expects key=value, got '" + kv + "'");
    }
    const std::string key = kv.substr(0, eq);
    const std::string value = kv.substr(eq + 1);
    std::size_t used = 0;
    double parsed = 0.0;
    try {
      parsed = std::stod(value, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != value.size()) {
      throw ValidationError("--param " + key + ": '" + value + "' is not a number");
    }
    spec.params[key] = parsed;
  }
}

NamedStateSpec parse_state(const std::string& name, const std::vector<std::string>& params) {
  // "singlet" is shorthand for the fourth Bell state.
  if (name == "singlet") {
    NamedStateSpec spec{NamedState::Bell, {{"which", 3.0}}};
    apply_params(spec, params);
    return spec;
  }
  const auto family = named_state_from_name(name);
  if (!family) {
    throw ValidationError("unknown state family '" + name + "'");
  }
  NamedStateSpec spec{*family, {}};
  apply_params(spec, params);
  return spec;
}

struct RangeSpec {
  double lo = 0.0, hi = 1.0, step = 0.01;
};

RangeSpec parse_range(const std::string& text) {
  RangeSpec r;
  const auto c1 = text.find(':');
  const auto c2 = text.find(':', c1 == std::string::npos ? c1 : c1 + 1);
  if (c1 == std::string::npos || c2 == std::string::npos) {
    throw ValidationError("--range expects lo:hi:step, got '" + text + "'");
  }
  try {
    r.lo = std::stod(text.substr(0, c1));
    r.hi = std::stod(text.substr(c1 + 1, c2 - c1 - 1));
    r.step = std::stod(text.substr(c2 + 1));
  } catch (const std::exception&) {
    throw ValidationError("--range expects numeric lo:hi:step, got '" + text + "'");
  }
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sepscope — separability criteria for bipartite quantum states"};
  app.set_version_flag("--version", std::string(kToolName) + " " + kVersion);
  app.require_subcommand(1);

  Tolerances tol;
  if (const char* env = std::getenv("SEPSCOPE_TOL")) {
    try {
      tol.criterion = std::stod(env);
    } catch (const std::exception&) {
      std::cerr << "error: SEPSCOPE_TOL is not a number: " << env << "\n";
      return kExitError;
    }
  }
  app.add_option("--tol", tol.criterion, "criterion decision tolerance");
  app.add_option("--rank-tol", tol.rank, "eigenvalue rank cutoff");

  std::string format = "text";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"json", "csv", "text"}));

  // analyze
  auto* analyze = app.add_subcommand("analyze", "evaluate all criteria on one state");
  analyze->fallthrough();
  std::string state_name;
  std::vector<std::string> params;
  std::string file;
  analyze->add_option("--state", state_name, "state family name");
  analyze->add_option("--param", params, "family parameter key=value (repeatable)");
  analyze->add_option("--file", file, "state source JSON file");

  // sweep
  auto* sweep = app.add_subcommand("sweep", "scan a family parameter and emit criterion curves");
  sweep->fallthrough();
  std::string sweep_state;
  std::vector<std::string> sweep_params;
  std::string sweep_param_name;
  std::string range_text = "0:1:0.01";
  std::string criteria_text;
  sweep->add_option("--state", sweep_state, "state family name")->required();
  sweep->add_option("--param", sweep_params, "fixed parameter key=value (repeatable)");
  sweep->add_option("--sweep-param", sweep_param_name, "parameter to sweep (family default if omitted)");
  sweep->add_option("--range", range_text, "lo:hi:step");
  sweep->add_option("--criteria", criteria_text, "comma-separated criterion subset");

  // compare
  auto* compare = app.add_subcommand("compare", "criterion statistics over a random ensemble");
  compare->fallthrough();
  int d_a = 2, d_b = 2, samples = 100, max_terms = 8;
  std::uint64_t seed = 1;
  std::string ensemble = "random";
  compare->add_option("--da", d_a, "dimension of subsystem A");
  compare->add_option("--db", d_b, "dimension of subsystem B");
  compare->add_option("--samples", samples, "ensemble size");
  compare->add_option("--seed", seed, "base seed (sample k uses seed + k)");
  compare->add_option("--ensemble", ensemble, "sampling ensemble")
      ->check(CLI::IsMember({"random", "separable"}));
  compare->add_option("--terms", max_terms, "separable ensemble: max mixture terms");

  // dilute
  auto* dilute_cmd = app.add_subcommand("dilute", "tensor an inner state with an outer one and re-test");
  dilute_cmd->fallthrough();
  std::string inner_name, outer_name;
  std::vector<std::string> inner_params, outer_params;
  dilute_cmd->add_option("--inner", inner_name, "inner state family")->required();
  dilute_cmd->add_option("--inner-param", inner_params, "inner parameter key=value (repeatable)");
  dilute_cmd->add_option("--outer", outer_name, "outer state family")->required();
  dilute_cmd->add_option("--outer-param", outer_params, "outer parameter key=value (repeatable)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (analyze->parsed()) {
      AnalyzeOptions opts;
      if (!state_name.empty()) opts.state = parse_state(state_name, params);
      if (!file.empty()) opts.file = file;
      opts.tol = tol;
      const AnalyzeResult result = cmd_analyze(opts);
      if (format == "json") {
        std::cout << report_to_json(result.report).dump(2) << "\n";
      } else {
        std::cout << report_to_text(result.report);
      }
      return result.exit_code;
    }

    if (sweep->parsed()) {
      SweepOptions opts;
      opts.base = parse_state(sweep_state, sweep_params);
      opts.param = sweep_param_name;
      const RangeSpec r = parse_range(range_text);
      opts.lo = r.lo;
      opts.hi = r.hi;
      opts.step = r.step;
      opts.tol = tol;
      if (!criteria_text.empty()) {
        std::stringstream ss(criteria_text);
        std::string item;
        while (std::getline(ss, item, ',')) {
          const auto c = criterion_from_name(item);
          if (!c) throw ValidationError("unknown criterion '" + item + "'");
          opts.criteria.push_back(*c);
        }
      }
      const SweepResult result = cmd_sweep(opts);
      std::cout << sweep_to_csv(result);  // CSV is the sweep output in every format
      return kExitAllPass;
    }

    if (compare->parsed()) {
      CompareOptions opts;
      opts.d_a = d_a;
      opts.d_b = d_b;
      opts.samples = samples;
      opts.seed = seed;
      opts.ensemble = ensemble == "separable" ? EnsembleKind::Separable : EnsembleKind::Random;
      opts.max_terms = max_terms;
      opts.tol = tol;
      const CompareSummary summary = cmd_compare(opts);
      if (format == "json") {
        std::cout << compare_to_json(summary).dump(2) << "\n";
      } else if (format == "csv") {
        std::cout << compare_to_csv(summary);
      } else {
        std::cout << compare_to_text(summary);
      }
      return kExitAllPass;
    }

    if (dilute_cmd->parsed()) {
      const NamedStateSpec inner = parse_state(inner_name, inner_params);
      const NamedStateSpec outer = parse_state(outer_name, outer_params);
      const DiluteResult result = cmd_dilute(inner, outer, tol);
      if (format == "json") {
        json out{{"inner", report_to_json(result.inner)},
                 {"outer", report_to_json(result.outer)},
                 {"diluted", report_to_json(result.diluted)}};
        std::cout << out.dump(2) << "\n";
      } else {
        std::cout << "== inner ==\n" << report_to_text(result.inner);
        std::cout << "== outer ==\n" << report_to_text(result.outer);
        std::cout << "== diluted ==\n" << report_to_text(result.diluted);
      }
      return result.exit_code;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
