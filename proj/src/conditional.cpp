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

#include "sepscope/conditional.hpp"

#include <cmath>
#include <sstream>

namespace sepscope {

namespace {

constexpr double kRangeInclusionTol = 1e-8;

/// 1_A (x) rho_B for conditioned_on = B, rho_A (x) 1_B for conditioned_on = A.
HermitianOperator conditioning_factor(const DensityOperator& rho, Subsystem conditioned_on) {
  const BipartiteShape& sh = rho.shape();
  if (conditioned_on == Subsystem::B) {
    HermitianOperator rho_b = partial_trace(rho, Subsystem::A);
    return tensor(HermitianOperator(ComplexMatrix::Identity(sh.dim_a, sh.dim_a)), rho_b);
  }
  HermitianOperator rho_a = partial_trace(rho, Subsystem::B);
  return tensor(rho_a, HermitianOperator(ComplexMatrix::Identity(sh.dim_b, sh.dim_b)));
}

/// Range inclusion (the support of rho_AB lies inside the support of the
/// conditioning factor): every kernel vector of the factor must annihilate
/// rho_AB.  A violation beyond tolerance signals a non-state input.
void check_range_inclusion(const DensityOperator& rho, const EigenSystem& factor_eig,
                           double rank_tol) {
  const ComplexMatrix& m = rho.matrix();
  for (Eigen::Index i = 0; i < factor_eig.spectrum.values.size(); ++i) {
    if (factor_eig.spectrum.values(i) > rank_tol) continue;
    const double residual = (m * factor_eig.vectors.col(i)).norm();
    if (residual > kRangeInclusionTol) {
      std::ostringstream os;
      os << "conditional_amplitude: range inclusion violated: a kernel vector of the "
            "conditioning marginal (eigenvalue "
         << factor_eig.spectrum.values(i) << ") maps to norm " << residual
         << " under the joint state";
      throw InconsistencyError(os.str());
    }
  }
}

double log2_support_trace(const DensityOperator& rho, const HermitianOperator& amp,
                          double rank_tol) {
  const EigenSystem es = hermitian_eig(amp);
  const Eigen::Index n = amp.dim();
  RealVector logs = RealVector::Zero(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double lam = es.spectrum.values(i);
    if (lam > rank_tol) logs(i) = std::log2(lam);
  }
  const ComplexMatrix log_amp = es.vectors * logs.asDiagonal() * es.vectors.adjoint();
  return -(rho.matrix() * log_amp).trace().real();
}

}  // namespace

ConditionalAmplitude conditional_amplitude(const DensityOperator& rho, Subsystem conditioned_on,
                                           double rank_tol) {
  const HermitianOperator factor = conditioning_factor(rho, conditioned_on);
  const EigenSystem factor_eig = hermitian_eig(factor);
  check_range_inclusion(rho, factor_eig, rank_tol);

  const EigenSystem rho_eig = hermitian_eig(rho.op());
  const int supp = support_dimension(rho_eig.spectrum, rank_tol);
  if (supp == 0) {
    throw RankError("conditional_amplitude: state has empty support at rank tolerance");
  }

  const auto log_fn = [](double x) { return std::log(x); };
  const HermitianOperator log_rho = matrix_function(rho.op(), log_fn, true, rank_tol);
  const HermitianOperator log_factor = matrix_function(factor, log_fn, true, rank_tol);
  const ComplexMatrix proj = support_projector(rho_eig, rank_tol).matrix();

  // Compress the log-difference to the support of rho_AB, exponentiate there,
  // and zero the kernel.  The support is invariant under the compressed
  // operator, so the outer sandwich removes exactly the exp(0) = 1 kernel
  // block that full-space exponentiation introduces.
  const ComplexMatrix diff = log_rho.matrix() - log_factor.matrix();
  const HermitianOperator compressed(proj * diff * proj);
  const HermitianOperator expd =
      matrix_function(compressed, [](double x) { return std::exp(x); });
  HermitianOperator amp(proj * expd.matrix() * proj);

  const Spectrum sp = hermitian_spectrum(amp);
  return ConditionalAmplitude{std::move(amp), supp, sp.max()};
}

double conditional_entropy_from(const DensityOperator& rho, const ConditionalAmplitude& amp,
                                double rank_tol) {
  return log2_support_trace(rho, amp.op, rank_tol);
}

double conditional_entropy(const DensityOperator& rho, Subsystem conditioned_on,
                           double rank_tol) {
  return conditional_entropy_from(rho, conditional_amplitude(rho, conditioned_on, rank_tol),
                                  rank_tol);
}

CriterionVerdict spectral_criterion(const DensityOperator& rho, Subsystem conditioned_on,
                                    double tol, double rank_tol) {
  const ConditionalAmplitude amp = conditional_amplitude(rho, conditioned_on, rank_tol);
  Spectrum sp = hermitian_spectrum(amp.op);
  const double stat = sp.max();
  return CriterionVerdict{Criterion::SpectralConditional, stat, std::move(sp),
                          criterion_passes(Criterion::SpectralConditional, stat, tol), tol};
}

CriterionVerdict entropic_criterion(const DensityOperator& rho, Subsystem conditioned_on,
                                    double tol, double rank_tol) {
  const ConditionalAmplitude amp = conditional_amplitude(rho, conditioned_on, rank_tol);
  Spectrum sp = hermitian_spectrum(amp.op);
  const double stat = conditional_entropy_from(rho, amp, rank_tol);
  return CriterionVerdict{Criterion::EntropicConditional, stat, std::move(sp),
                          criterion_passes(Criterion::EntropicConditional, stat, tol), tol};
}

TrotterResult trotter_approximation(const DensityOperator& rho, int n, double rank_tol) {
  if (n < 1) {
    throw ValidationError("trotter_approximation: n must be >= 1");
  }
  const Subsystem conditioned_on = Subsystem::B;
  const HermitianOperator marginal = partial_trace(rho, Subsystem::A);
  if (hermitian_spectrum(marginal).min() <= rank_tol) {
    throw RankError("trotter_approximation: conditioning marginal is singular");
  }
  const HermitianOperator factor = conditioning_factor(rho, conditioned_on);

  const double inv_n = 1.0 / static_cast<double>(n);
  const HermitianOperator root =
      matrix_function(rho.op(), [inv_n](double x) { return std::pow(x, inv_n); }, true, rank_tol);
  const HermitianOperator inv_root = matrix_function(
      factor, [inv_n](double x) { return std::pow(x, -inv_n); }, true, rank_tol);

  const ComplexMatrix step = root.matrix() * inv_root.matrix();
  ComplexMatrix out = ComplexMatrix::Identity(step.rows(), step.cols());
  for (int k = 0; k < n; ++k) out = out * step;

  const double herm_dev = max_abs(out - out.adjoint().eval());
  return TrotterResult{std::move(out), herm_dev};
}

}  // namespace sepscope
