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

#include "sepscope/report.hpp"

#include <cstdio>
#include <sstream>

#include <nlohmann/json.hpp>

#include "sepscope/version.hpp"

namespace sepscope {

using nlohmann::json;

namespace {

constexpr double kGeometryTol = 1e-9;

std::string describe(const std::optional<NamedStateSpec>& spec, const BipartiteShape& dims) {
  if (!spec) {
    std::ostringstream os;
    os << "matrix " << dims.dim_a << "x" << dims.dim_b;
    return os.str();
  }
  std::ostringstream os;
  os << named_state_name(spec->name);
  if (!spec->params.empty()) {
    os << "(";
    bool first = true;
    for (const auto& [key, value] : spec->params) {
      if (!first) os << ", ";
      os << key << "=" << format_double(value);
      first = false;
    }
    os << ")";
  }
  return os.str();
}

json spectrum_to_json(const Spectrum& s) {
  json arr = json::array();
  for (Eigen::Index i = 0; i < s.values.size(); ++i) arr.push_back(s.values(i));
  return arr;
}

Spectrum spectrum_from_json(const json& j) {
  RealVector v(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) v(static_cast<Eigen::Index>(i)) = j[i].get<double>();
  return Spectrum{std::move(v)};
}

bool is_t_diagonal(const HSDecomposition& d) {
  if (d.r.cwiseAbs().maxCoeff() > kGeometryTol) return false;
  if (d.s.cwiseAbs().maxCoeff() > kGeometryTol) return false;
  for (int n = 0; n < 3; ++n)
    for (int m = 0; m < 3; ++m)
      if (n != m && std::abs(d.t(n, m)) > kGeometryTol) return false;
  return true;
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

AnalysisReport analyze_state(const DensityOperator& rho, std::optional<NamedStateSpec> spec,
                             const Tolerances& tol) {
  AnalysisReport report;
  report.tool = kToolName;
  report.version = kVersion;
  report.state =
      StateDescription{describe(spec, rho.shape()), std::move(spec), rho.shape(), rho.matrix()};
  report.tolerances = tol;

  const CriterionReport cr = criterion_report(rho, tol.criterion, tol.rank);
  report.verdicts = cr.verdicts;
  report.certified_inseparable = cr.certified_inseparable;

  const ConditionalAmplitude amp = conditional_amplitude(rho, Subsystem::B, tol.rank);
  report.conditional.support_dim = amp.support_dim;
  report.conditional.max_eigenvalue = amp.max_eigenvalue;
  report.conditional.entropy_bits = conditional_entropy_from(rho, amp, tol.rank);

  if (rho.shape().dim_a == 2 && rho.shape().dim_b == 2) {
    report.hs = hs_decompose(rho);
    if (is_t_diagonal(*report.hs)) {
      report.region = t_state_region(TDiagonalVector{report.hs->t.diagonal()}, tol.criterion);
    }
  }

  const int da = rho.shape().dim_a;
  const int db = rho.shape().dim_b;
  if (std::min(da, db) <= 2 && da * db <= 6) {
    report.notes.push_back(
        "shape " + std::to_string(da) + "x" + std::to_string(db) +
        ": the map and partial-transpose criteria are conclusive; a passing report certifies "
        "separability");
  } else {
    report.notes.push_back(
        "shape " + std::to_string(da) + "x" + std::to_string(db) +
        ": these criteria are necessary but not sufficient; a passing report does not certify "
        "separability");
  }
  return report;
}

json matrix_to_json(const ComplexMatrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      row.push_back(json::array({m(i, j).real(), m(i, j).imag()}));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

ComplexMatrix matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty()) {
    throw ValidationError("matrix: expected a non-empty array of rows");
  }
  const auto rows = static_cast<Eigen::Index>(j.size());
  ComplexMatrix m(rows, rows);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const json& row = j[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != rows) {
      std::ostringstream os;
      os << "matrix: row " << i << " has " << row.size() << " entries, expected " << rows;
      throw ValidationError(os.str());
    }
    for (Eigen::Index k = 0; k < rows; ++k) {
      const json& cell = row[static_cast<std::size_t>(k)];
      if (!cell.is_array() || cell.size() != 2) {
        std::ostringstream os;
        os << "matrix: entry (" << i << "," << k << ") is not an [re, im] pair";
        throw ValidationError(os.str());
      }
      m(i, k) = Complex(cell[0].get<double>(), cell[1].get<double>());
    }
  }
  return m;
}

json state_spec_to_json(const NamedStateSpec& spec) {
  json params = json::object();
  for (const auto& [key, value] : spec.params) params[key] = value;
  return json{{"state", std::string(named_state_name(spec.name))}, {"params", params}};
}

NamedStateSpec state_spec_from_json(const json& j) {
  const std::string name = j.at("state").get<std::string>();
  const auto parsed = named_state_from_name(name);
  if (!parsed) {
    throw ValidationError("state spec: unknown state family '" + name + "'");
  }
  NamedStateSpec spec{*parsed, {}};
  if (j.contains("params")) {
    for (const auto& [key, value] : j.at("params").items()) {
      spec.params[key] = value.get<double>();
    }
  }
  return spec;
}

std::pair<DensityOperator, std::optional<NamedStateSpec>> parse_state_source(const json& j) {
  if (j.contains("state")) {
    NamedStateSpec spec = state_spec_from_json(j);
    DensityOperator rho = construct(spec);
    return {std::move(rho), std::move(spec)};
  }
  if (!j.contains("dims") || !j.contains("matrix")) {
    throw ValidationError(
        "state source: expected either {\"state\": ..., \"params\": ...} or "
        "{\"dims\": [dA, dB], \"matrix\": [...]}");
  }
  const json& dims = j.at("dims");
  if (!dims.is_array() || dims.size() != 2) {
    throw ValidationError("state source: field 'dims' must be [dA, dB]");
  }
  const BipartiteShape shape{dims[0].get<int>(), dims[1].get<int>()};
  ComplexMatrix m = matrix_from_json(j.at("matrix"));
  return {DensityOperator(HermitianOperator(std::move(m)), shape), std::nullopt};
}

json report_to_json(const AnalysisReport& report) {
  json verdicts = json::array();
  for (const CriterionVerdict& v : report.verdicts) {
    verdicts.push_back(json{{"criterion", std::string(criterion_name(v.criterion))},
                            {"statistic", v.statistic},
                            {"spectrum", spectrum_to_json(v.spectrum)},
                            {"passes", v.passes},
                            {"tolerance", v.tolerance}});
  }
  json out{
      {"tool", report.tool},
      {"version", report.version},
      {"state",
       json{{"description", report.state.description},
            {"spec", report.state.spec ? state_spec_to_json(*report.state.spec) : json(nullptr)},
            {"dims", json::array({report.state.dims.dim_a, report.state.dims.dim_b})},
            {"matrix", matrix_to_json(report.state.matrix)}}},
      {"tolerances",
       json{{"criterion", report.tolerances.criterion}, {"rank", report.tolerances.rank}}},
      {"verdicts", verdicts},
      {"conditional", json{{"entropy_bits", report.conditional.entropy_bits},
                           {"max_eigenvalue", report.conditional.max_eigenvalue},
                           {"support_dim", report.conditional.support_dim}}},
      {"certified_inseparable", report.certified_inseparable},
      {"notes", report.notes},
  };
  if (report.hs) {
    json t = json::array();
    for (int n = 0; n < 3; ++n) {
      t.push_back(json::array({report.hs->t(n, 0), report.hs->t(n, 1), report.hs->t(n, 2)}));
    }
    out["hs"] = json{{"r", json::array({report.hs->r(0), report.hs->r(1), report.hs->r(2)})},
                     {"s", json::array({report.hs->s(0), report.hs->s(1), report.hs->s(2)})},
                     {"t", t}};
  } else {
    out["hs"] = nullptr;
  }
  out["t_state_region"] =
      report.region ? json(std::string(t_state_region_name(*report.region))) : json(nullptr);
  return out;
}

AnalysisReport report_from_json(const json& j) {
  AnalysisReport report;
  report.tool = j.at("tool").get<std::string>();
  report.version = j.at("version").get<std::string>();

  const json& st = j.at("state");
  report.state.description = st.at("description").get<std::string>();
  if (!st.at("spec").is_null()) report.state.spec = state_spec_from_json(st.at("spec"));
  report.state.dims = BipartiteShape{st.at("dims")[0].get<int>(), st.at("dims")[1].get<int>()};
  report.state.matrix = matrix_from_json(st.at("matrix"));

  report.tolerances.criterion = j.at("tolerances").at("criterion").get<double>();
  report.tolerances.rank = j.at("tolerances").at("rank").get<double>();

  for (const json& vj : j.at("verdicts")) {
    const auto c = criterion_from_name(vj.at("criterion").get<std::string>());
    if (!c) throw ValidationError("report: unknown criterion '" +
                                  vj.at("criterion").get<std::string>() + "'");
    report.verdicts.push_back(CriterionVerdict{*c, vj.at("statistic").get<double>(),
                                               spectrum_from_json(vj.at("spectrum")),
                                               vj.at("passes").get<bool>(),
                                               vj.at("tolerance").get<double>()});
  }

  const json& cond = j.at("conditional");
  report.conditional = ConditionalSummary{cond.at("entropy_bits").get<double>(),
                                          cond.at("max_eigenvalue").get<double>(),
                                          cond.at("support_dim").get<int>()};

  if (!j.at("hs").is_null()) {
    HSDecomposition d;
    const json& hs = j.at("hs");
    for (int n = 0; n < 3; ++n) {
      d.r(n) = hs.at("r")[n].get<double>();
      d.s(n) = hs.at("s")[n].get<double>();
      for (int m = 0; m < 3; ++m) d.t(n, m) = hs.at("t")[n][m].get<double>();
    }
    report.hs = d;
  }
  if (!j.at("t_state_region").is_null()) {
    report.region = t_state_region_from_name(j.at("t_state_region").get<std::string>());
  }
  report.certified_inseparable = j.at("certified_inseparable").get<bool>();
  for (const json& n : j.at("notes")) report.notes.push_back(n.get<std::string>());
  return report;
}

std::string report_to_text(const AnalysisReport& report) {
  std::ostringstream os;
  os << report.tool << " " << report.version << " — " << report.state.description << " ["
     << report.state.dims.dim_a << "x" << report.state.dims.dim_b << "]\n";
  os << "tolerances: criterion " << format_double(report.tolerances.criterion) << ", rank "
     << format_double(report.tolerances.rank) << "\n";
  for (const CriterionVerdict& v : report.verdicts) {
    os << "  " << (v.passes ? "pass" : "FAIL") << "  " << criterion_name(v.criterion)
       << "  statistic " << format_double(v.statistic) << "\n";
  }
  os << "conditional entropy: " << format_double(report.conditional.entropy_bits)
     << " bits; max conditional eigenvalue: "
     << format_double(report.conditional.max_eigenvalue)
     << "; support dim: " << report.conditional.support_dim << "\n";
  if (report.hs) {
    os << "hs: r = (" << format_double(report.hs->r(0)) << ", " << format_double(report.hs->r(1))
       << ", " << format_double(report.hs->r(2)) << "), s = (" << format_double(report.hs->s(0))
       << ", " << format_double(report.hs->s(1)) << ", " << format_double(report.hs->s(2))
       << ")\n";
  }
  if (report.region) {
    os << "t-state region: " << t_state_region_name(*report.region) << "\n";
  }
  os << "certified inseparable: " << (report.certified_inseparable ? "yes" : "no") << "\n";
  for (const std::string& n : report.notes) os << "note: " << n << "\n";
  return os.str();
}

bool reports_equal(const AnalysisReport& a, const AnalysisReport& b) {
  return report_to_json(a) == report_to_json(b);
}

}  // namespace sepscope
