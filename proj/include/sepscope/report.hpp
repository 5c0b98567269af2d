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

#ifndef SEPSCOPE_REPORT_HPP
#define SEPSCOPE_REPORT_HPP

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "sepscope/conditional.hpp"
#include "sepscope/maps.hpp"
#include "sepscope/qubit_geometry.hpp"
#include "sepscope/states.hpp"

namespace sepscope {

struct Tolerances {
  double criterion = kCriterionTol;
  double rank = kRankTol;

  bool operator==(const Tolerances&) const = default;
};

/// What was analyzed: a label, the family spec when the state came from the
/// catalog, and the matrix itself.
struct StateDescription {
  std::string description;
  std::optional<NamedStateSpec> spec;
  BipartiteShape dims;
  ComplexMatrix matrix;
};

struct ConditionalSummary {
  double entropy_bits = 0.0;
  double max_eigenvalue = 0.0;
  int support_dim = 0;
};

/// Full analysis of one state: all criterion verdicts, the conditional
/// summary, and the two-qubit geometry extras when they apply.
struct AnalysisReport {
  std::string tool;
  std::string version;
  StateDescription state;
  Tolerances tolerances;
  std::vector<CriterionVerdict> verdicts;
  ConditionalSummary conditional;
  std::optional<HSDecomposition> hs;       // 2x2 states only
  std::optional<TStateRegion> region;      // 2x2 states with r = s = 0, diagonal t
  bool certified_inseparable = false;
  std::vector<std::string> notes;
};

AnalysisReport analyze_state(const DensityOperator& rho, std::optional<NamedStateSpec> spec,
                             const Tolerances& tol);

nlohmann::json report_to_json(const AnalysisReport& report);
AnalysisReport report_from_json(const nlohmann::json& j);
std::string report_to_text(const AnalysisReport& report);

/// Structural equality, for round-trip checks.
bool reports_equal(const AnalysisReport& a, const AnalysisReport& b);

/// Matrix file format: {"dims": [dA, dB], "matrix": [[[re, im], ...], ...]}
/// row-major with the A index major.
nlohmann::json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const nlohmann::json& j);

nlohmann::json state_spec_to_json(const NamedStateSpec& spec);
NamedStateSpec state_spec_from_json(const nlohmann::json& j);

/// Parses a state source document: either {"state": name, "params": {...}}
/// or {"dims": [...], "matrix": [...]}.
std::pair<DensityOperator, std::optional<NamedStateSpec>> parse_state_source(
    const nlohmann::json& j);

/// Floats rendered with 12 significant digits (CSV convention).
std::string format_double(double v);

}  // namespace sepscope

#endif  // SEPSCOPE_REPORT_HPP
