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

#ifndef SEPSCOPE_COMMANDS_HPP
#define SEPSCOPE_COMMANDS_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "sepscope/report.hpp"

namespace sepscope {

// Scriptable exit-code contract.
inline constexpr int kExitAllPass = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitInseparable = 2;

struct AnalyzeOptions {
  std::optional<NamedStateSpec> state;  // exactly one of state / file
  std::optional<std::string> file;      // path to a state source JSON
  Tolerances tol;
};

struct AnalyzeResult {
  AnalysisReport report;
  int exit_code = kExitAllPass;
};

AnalyzeResult cmd_analyze(const AnalyzeOptions& opts);

struct SweepOptions {
  NamedStateSpec base;        // fixed parameters of the family
  std::string param;          // parameter swept; empty -> family default
  double lo = 0.0;
  double hi = 1.0;
  double step = 0.01;
  std::vector<Criterion> criteria;  // empty -> all seven
  Tolerances tol;
};

struct SweepRow {
  double param = 0.0;
  std::vector<double> statistics;  // one per selected criterion
  double entropy_bits = 0.0;
  double max_conditional_eigenvalue = 0.0;
};

struct SweepResult {
  std::vector<Criterion> criteria;
  std::vector<SweepRow> rows;  // ascending parameter order
};

SweepResult cmd_sweep(const SweepOptions& opts);

/// CSV with a fixed, documented column set:
/// param,<criterion names...>,entropy_bits,max_conditional_eigenvalue
std::string sweep_to_csv(const SweepResult& result);

/// Default swept parameter of a family ("x", "p", "a", "b").
std::string default_sweep_param(NamedState family);

enum class EnsembleKind { Random, Separable };

struct CompareOptions {
  int d_a = 2;
  int d_b = 2;
  int samples = 100;
  std::uint64_t seed = 1;
  EnsembleKind ensemble = EnsembleKind::Random;
  int max_terms = 8;  // separable ensemble: 1..max_terms mixture terms
  Tolerances tol;
};

struct CompareSummary {
  CompareOptions options;
  std::array<int, 7> fail_counts{};                 // order of kAllCriteria
  std::array<std::array<int, 7>, 7> fail_i_pass_j{};  // pairwise implication counts
  int any_fail_count = 0;
};

/// Evaluates all criteria over a seeded ensemble (sample k uses seed + k) and
/// tallies per-criterion failure counts plus pairwise implication counts.
CompareSummary cmd_compare(const CompareOptions& opts);

nlohmann::json compare_to_json(const CompareSummary& summary);
std::string compare_to_text(const CompareSummary& summary);
std::string compare_to_csv(const CompareSummary& summary);

struct DiluteResult {
  AnalysisReport inner;
  AnalysisReport outer;
  AnalysisReport diluted;
  int exit_code = kExitAllPass;  // reflects the diluted state
};

DiluteResult cmd_dilute(const NamedStateSpec& inner, const NamedStateSpec& outer,
                        const Tolerances& tol);

}  // namespace sepscope

#endif  // SEPSCOPE_COMMANDS_HPP
