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

#include "sepscope/maps.hpp"

#include <sstream>
#include <utility>

#include "sepscope/conditional.hpp"

namespace sepscope {

std::string_view criterion_name(Criterion c) {
  switch (c) {
    case Criterion::Lambda: return "lambda";
    case Criterion::DualLambda: return "dual_lambda";
    case Criterion::Symmetric: return "symmetric";
    case Criterion::PartialTransposeA: return "pt_a";
    case Criterion::PartialTransposeB: return "pt_b";
    case Criterion::SpectralConditional: return "spectral_conditional";
    case Criterion::EntropicConditional: return "entropic_conditional";
  }
  return "unknown";
}

std::optional<Criterion> criterion_from_name(std::string_view name) {
  for (Criterion c : kAllCriteria) {
    if (criterion_name(c) == name) return c;
  }
  return std::nullopt;
}

bool criterion_passes(Criterion c, double statistic, double tol) {
  if (c == Criterion::SpectralConditional) return statistic <= 1.0 + tol;
  return statistic >= -tol;  // min eigenvalue or entropy
}

HermitianOperator gamma(const HermitianOperator& rho) {
  const Eigen::Index d = rho.dim();
  ComplexMatrix out = rho.trace() * ComplexMatrix::Identity(d, d) - rho.matrix();
  return HermitianOperator(std::move(out));
}

BipartiteOperator lambda_map(const DensityOperator& rho) {
  const BipartiteShape sh = rho.shape();
  const HermitianOperator rho_b = partial_trace(rho, Subsystem::A);
  const HermitianOperator big =
      tensor(HermitianOperator(ComplexMatrix::Identity(sh.dim_a, sh.dim_a)), rho_b);
  return BipartiteOperator(HermitianOperator(big.matrix() - rho.matrix()), sh);
}

BipartiteOperator dual_lambda_map(const DensityOperator& rho) {
  const BipartiteShape sh = rho.shape();
  const HermitianOperator rho_a = partial_trace(rho, Subsystem::B);
  const HermitianOperator big =
      tensor(rho_a, HermitianOperator(ComplexMatrix::Identity(sh.dim_b, sh.dim_b)));
  return BipartiteOperator(HermitianOperator(big.matrix() - rho.matrix()), sh);
}

BipartiteOperator symmetric_map(const DensityOperator& rho) {
  const BipartiteShape sh = rho.shape();
  const HermitianOperator rho_a = partial_trace(rho, Subsystem::B);
  const HermitianOperator rho_b = partial_trace(rho, Subsystem::A);
  const HermitianOperator id_a(ComplexMatrix::Identity(sh.dim_a, sh.dim_a));
  const HermitianOperator id_b(ComplexMatrix::Identity(sh.dim_b, sh.dim_b));
  ComplexMatrix out = ComplexMatrix::Identity(sh.total(), sh.total()) -
                      tensor(rho_a, id_b).matrix() - tensor(id_a, rho_b).matrix() +
                      rho.matrix();
  return BipartiteOperator(HermitianOperator(std::move(out)), sh);
}

BipartiteOperator lambda_inverse(const BipartiteOperator& lam) {
  const BipartiteShape sh = lam.shape;
  if (sh.dim_a < 2) {
    std::ostringstream os;
    os << "lambda_inverse: degenerate shape, d_A = " << sh.dim_a;
    throw ShapeError(os.str());
  }
  const HermitianOperator lam_b = partial_trace(lam, Subsystem::A);
  const HermitianOperator big =
      tensor(HermitianOperator(ComplexMatrix::Identity(sh.dim_a, sh.dim_a)), lam_b);
  ComplexMatrix out = big.matrix() / static_cast<double>(sh.dim_a - 1) - lam.op.matrix();
  return BipartiteOperator(HermitianOperator(std::move(out)), sh);
}

BipartiteOperator symmetric_inverse(const BipartiteOperator& mu) {
  const BipartiteShape sh = mu.shape;
  if (sh.dim_a < 2 || sh.dim_b < 2) {
    std::ostringstream os;
    os << "symmetric_inverse: degenerate shape (" << sh.dim_a << "," << sh.dim_b << ")";
    throw ShapeError(os.str());
  }
  const HermitianOperator mu_a = partial_trace(mu, Subsystem::B);
  const HermitianOperator mu_b = partial_trace(mu, Subsystem::A);
  const HermitianOperator id_a(ComplexMatrix::Identity(sh.dim_a, sh.dim_a));
  const HermitianOperator id_b(ComplexMatrix::Identity(sh.dim_b, sh.dim_b));
  ComplexMatrix out = ComplexMatrix::Identity(sh.total(), sh.total()) -
                      tensor(mu_a, id_b).matrix() / static_cast<double>(sh.dim_b - 1) -
                      tensor(id_a, mu_b).matrix() / static_cast<double>(sh.dim_a - 1) +
                      mu.op.matrix();
  return BipartiteOperator(HermitianOperator(std::move(out)), sh);
}

namespace {

CriterionVerdict min_eig_verdict(Criterion c, const HermitianOperator& mapped, double tol) {
  Spectrum sp = hermitian_spectrum(mapped);
  const double stat = sp.min();
  return CriterionVerdict{c, stat, std::move(sp), criterion_passes(c, stat, tol), tol};
}

}  // namespace

CriterionVerdict map_criterion(const DensityOperator& rho, MapKind map, double tol) {
  switch (map) {
    case MapKind::Lambda:
      return min_eig_verdict(Criterion::Lambda, lambda_map(rho).op, tol);
    case MapKind::DualLambda:
      return min_eig_verdict(Criterion::DualLambda, dual_lambda_map(rho).op, tol);
    case MapKind::Symmetric:
      return min_eig_verdict(Criterion::Symmetric, symmetric_map(rho).op, tol);
  }
  throw ValidationError("map_criterion: unknown map kind");
}

CriterionVerdict partial_transpose_criterion(const DensityOperator& rho, Subsystem over,
                                             double tol) {
  const Criterion c =
      over == Subsystem::A ? Criterion::PartialTransposeA : Criterion::PartialTransposeB;
  return min_eig_verdict(c, partial_transpose(rho, over).op, tol);
}

CriterionReport criterion_report(const DensityOperator& rho, double tol, double rank_tol) {
  CriterionReport report;
  report.verdicts.push_back(map_criterion(rho, MapKind::Lambda, tol));
  report.verdicts.push_back(map_criterion(rho, MapKind::DualLambda, tol));
  report.verdicts.push_back(map_criterion(rho, MapKind::Symmetric, tol));
  report.verdicts.push_back(partial_transpose_criterion(rho, Subsystem::A, tol));
  report.verdicts.push_back(partial_transpose_criterion(rho, Subsystem::B, tol));

  // Both conditional verdicts share one amplitude computation.
  const ConditionalAmplitude amp = conditional_amplitude(rho, Subsystem::B, rank_tol);
  Spectrum amp_sp = hermitian_spectrum(amp.op);
  const double max_eig = amp_sp.max();
  report.verdicts.push_back(CriterionVerdict{
      Criterion::SpectralConditional, max_eig, amp_sp,
      criterion_passes(Criterion::SpectralConditional, max_eig, tol), tol});
  const double entropy = conditional_entropy_from(rho, amp, rank_tol);
  report.verdicts.push_back(CriterionVerdict{
      Criterion::EntropicConditional, entropy, std::move(amp_sp),
      criterion_passes(Criterion::EntropicConditional, entropy, tol), tol});

  for (const CriterionVerdict& v : report.verdicts) {
    if (!v.passes) report.certified_inseparable = true;
  }
  return report;
}

}  // namespace sepscope
