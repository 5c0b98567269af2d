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

#include "sepscope/commands.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "sepscope/version.hpp"

namespace sepscope {

using nlohmann::json;

AnalyzeResult cmd_analyze(const AnalyzeOptions& opts) {
  if (opts.state.has_value() == opts.file.has_value()) {
    throw ValidationError("analyze: exactly one of --state and --file must be given");
  }
  AnalysisReport report;
  if (opts.state) {
    report = analyze_state(construct(*opts.state), *opts.state, opts.tol);
  } else {
    std::ifstream in(*opts.file);
    if (!in) {
      throw ValidationError("analyze: cannot open file '" + *opts.file + "'");
    }
    json j;
    try {
      in >> j;
    } catch (const json::parse_error& e) {
      throw ValidationError("analyze: malformed JSON in '" + *opts.file + "': " + e.what());
    }
    auto [rho, spec] = parse_state_source(j);
    report = analyze_state(rho, spec, opts.tol);
  }
  const int code = report.certified_inseparable ? kExitInseparable : kExitAllPass;
  return AnalyzeResult{std::move(report), code};
}

std::string default_sweep_param(NamedState family) {
  switch (family) {
    case NamedState::Werner:
    case NamedState::GisinMixture:
    case NamedState::SingletPlusGround:
      return "x";
    case NamedState::HorodeckiTwoQubit:
      return "p";
    case NamedState::Horodecki3x3:
      return "a";
    case NamedState::Horodecki2x4:
      return "b";
    default:
      return "";
  }
}

SweepResult cmd_sweep(const SweepOptions& opts) {
  if (!(opts.step > 0.0)) {
    throw ValidationError("sweep: step must be positive");
  }
  if (opts.hi < opts.lo) {
    throw ValidationError("sweep: empty range, hi < lo");
  }
  std::string param = opts.param;
  if (param.empty()) param = default_sweep_param(opts.base.name);
  if (param.empty()) {
    std::ostringstream os;
    os << "sweep: family " << named_state_name(opts.base.name)
       << " has no sweepable parameter; pass one explicitly";
    throw ValidationError(os.str());
  }

  SweepResult result;
  result.criteria = opts.criteria.empty()
                        ? std::vector<Criterion>(kAllCriteria.begin(), kAllCriteria.end())
                        : opts.criteria;

  const auto steps = static_cast<std::int64_t>(std::floor((opts.hi - opts.lo) / opts.step + 0.5));
  for (std::int64_t k = 0;; ++k) {
    const double value = opts.lo + static_cast<double>(k) * opts.step;
    if (value > opts.hi + opts.step * 0.5 || k > steps) break;
    NamedStateSpec spec = opts.base;
    spec.params[param] = std::min(value, opts.hi);
    const DensityOperator rho = construct(spec);
    const CriterionReport cr = criterion_report(rho, opts.tol.criterion, opts.tol.rank);

    SweepRow row;
    row.param = spec.params[param];
    for (Criterion c : result.criteria) {
      for (const CriterionVerdict& v : cr.verdicts) {
        if (v.criterion == c) {
          row.statistics.push_back(v.statistic);
          break;
        }
      }
    }
    for (const CriterionVerdict& v : cr.verdicts) {
      if (v.criterion == Criterion::EntropicConditional) row.entropy_bits = v.statistic;
      if (v.criterion == Criterion::SpectralConditional) {
        row.max_conditional_eigenvalue = v.statistic;
      }
    }
    result.rows.push_back(std::move(row));
  }
  if (result.rows.empty()) {
    throw ValidationError("sweep: empty range");
  }
  return result;
}

std::string sweep_to_csv(const SweepResult& result) {
  std::ostringstream os;
  os << "param";
  for (Criterion c : result.criteria) os << "," << criterion_name(c);
  os << ",entropy_bits,max_conditional_eigenvalue\n";
  for (const SweepRow& row : result.rows) {
    os << format_double(row.param);
    for (double s : row.statistics) os << "," << format_double(s);
    os << "," << format_double(row.entropy_bits) << ","
       << format_double(row.max_conditional_eigenvalue) << "\n";
  }
  return os.str();
}

CompareSummary cmd_compare(const CompareOptions& opts) {
  if (opts.samples < 1) throw ValidationError("compare: samples must be >= 1");
  if (opts.d_a < 1 || opts.d_b < 1 || opts.d_a * opts.d_b > 64) {
    throw ValidationError("compare: shape outside the supported range (total dim <= 64)");
  }
  if (opts.ensemble == EnsembleKind::Separable && opts.max_terms < 1) {
    throw ValidationError("compare: max_terms must be >= 1 for the separable ensemble");
  }
  CompareSummary summary;
  summary.options = opts;

  for (int k = 0; k < opts.samples; ++k) {
    const std::uint64_t seed = opts.seed + static_cast<std::uint64_t>(k);
    DensityOperator rho = [&] {
      if (opts.ensemble == EnsembleKind::Separable) {
        const int terms = 1 + static_cast<int>(seed % static_cast<std::uint64_t>(opts.max_terms));
        return random_separable(opts.d_a, opts.d_b, terms, seed);
      }
      return random_density(opts.d_a, opts.d_b, opts.d_a * opts.d_b, seed);
    }();

    const CriterionReport cr = criterion_report(rho, opts.tol.criterion, opts.tol.rank);
    std::array<bool, 7> fails{};
    for (std::size_t i = 0; i < kAllCriteria.size(); ++i) {
      fails[i] = !cr.verdicts[i].passes;
      if (fails[i]) ++summary.fail_counts[i];
    }
    if (cr.certified_inseparable) ++summary.any_fail_count;
    for (std::size_t i = 0; i < 7; ++i)
      for (std::size_t j = 0; j < 7; ++j)
        if (fails[i] && !fails[j]) ++summary.fail_i_pass_j[i][j];
  }
  return summary;
}

json compare_to_json(const CompareSummary& summary) {
  json names = json::array();
  for (Criterion c : kAllCriteria) names.push_back(std::string(criterion_name(c)));
  json fail_counts = json::object();
  json fail_fractions = json::object();
  const double n = summary.options.samples;
  for (std::size_t i = 0; i < 7; ++i) {
    const std::string name(criterion_name(kAllCriteria[i]));
    fail_counts[name] = summary.fail_counts[i];
    fail_fractions[name] = summary.fail_counts[i] / n;
  }
  json pairwise = json::array();
  for (std::size_t i = 0; i < 7; ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < 7; ++j) row.push_back(summary.fail_i_pass_j[i][j]);
    pairwise.push_back(std::move(row));
  }
  return json{
      {"tool", kToolName},
      {"version", kVersion},
      {"shape", json::array({summary.options.d_a, summary.options.d_b})},
      {"samples", summary.options.samples},
      {"seed", summary.options.seed},
      {"ensemble",
       summary.options.ensemble == EnsembleKind::Separable ? "separable" : "random"},
      {"criteria_order", names},
      {"fail_counts", fail_counts},
      {"fail_fractions", fail_fractions},
      {"any_fail_count", summary.any_fail_count},
      {"fail_i_pass_j", pairwise},
  };
}

std::string compare_to_text(const CompareSummary& summary) {
  std::ostringstream os;
  const CompareOptions& o = summary.options;
  os << "compare: " << o.d_a << "x" << o.d_b << ", " << o.samples << " samples, seed " << o.seed
     << ", ensemble " << (o.ensemble == EnsembleKind::Separable ? "separable" : "random")
     << "\n";
  for (std::size_t i = 0; i < 7; ++i) {
    os << "  " << criterion_name(kAllCriteria[i]) << ": " << summary.fail_counts[i] << "/"
       << o.samples << " fail\n";
  }
  os << "  any criterion: " << summary.any_fail_count << "/" << o.samples << " fail\n";
  os << "pairwise count(fail row, pass column):\n";
  os << "  rows/cols order:";
  for (Criterion c : kAllCriteria) os << " " << criterion_name(c);
  os << "\n";
  for (std::size_t i = 0; i < 7; ++i) {
    os << " ";
    for (std::size_t j = 0; j < 7; ++j) os << " " << summary.fail_i_pass_j[i][j];
    os << "\n";
  }
  return os.str();
}

std::string compare_to_csv(const CompareSummary& summary) {
  std::ostringstream os;
  os << "criterion,fail_count,fail_fraction\n";
  const double n = summary.options.samples;
  for (std::size_t i = 0; i < 7; ++i) {
    os << criterion_name(kAllCriteria[i]) << "," << summary.fail_counts[i] << ","
       << format_double(summary.fail_counts[i] / n) << "\n";
  }
  return os.str();
}

DiluteResult cmd_dilute(const NamedStateSpec& inner, const NamedStateSpec& outer,
                        const Tolerances& tol) {
  const DensityOperator inner_rho = construct(inner);
  const DensityOperator outer_rho = construct(outer);
  const DensityOperator diluted_rho = dilute(inner_rho, outer_rho);

  DiluteResult result{analyze_state(inner_rho, inner, tol), analyze_state(outer_rho, outer, tol),
                      analyze_state(diluted_rho, std::nullopt, tol), kExitAllPass};
  result.diluted.state.description =
      "dilute(" + result.inner.state.description + ", " + result.outer.state.description + ")";
  result.exit_code =
      result.diluted.certified_inseparable ? kExitInseparable : kExitAllPass;
  return result;
}

}  // namespace sepscope
