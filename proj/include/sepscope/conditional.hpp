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

#ifndef SEPSCOPE_CONDITIONAL_HPP
#define SEPSCOPE_CONDITIONAL_HPP

#include "sepscope/bipartite.hpp"
#include "sepscope/criteria.hpp"

namespace sepscope {

/// The conditional amplitude operator of a bipartite state: the quantum
/// analog of a conditional probability.  Positive semidefinite, lives on the
/// support of the state, and can have eigenvalues above 1 only for
/// inseparable states.
struct ConditionalAmplitude {
  HermitianOperator op;
  int support_dim = 0;
  double max_eigenvalue = 0.0;
};

/// exp[log rho_AB - log(1_A (x) rho_B)] with both logs support-restricted:
/// the log-difference is compressed to the support of rho_AB before
/// exponentiating, and the result vanishes on the kernel of rho_AB.
/// conditioned_on = B gives the amplitude of A given B; conditioned_on = A
/// the dual.  Throws InconsistencyError if a kernel vector of the marginal
/// factor fails to annihilate rho_AB (non-state input), RankError if the
/// support is empty.
ConditionalAmplitude conditional_amplitude(const DensityOperator& rho, Subsystem conditioned_on,
                                           double rank_tol = kRankTol);

/// Conditional von Neumann entropy in bits:
/// -Tr[rho_AB log2(conditional amplitude)], the trace restricted to the
/// support.  Equals S(AB) - S(B) (chain rule).  Negative values certify
/// inseparability.
double conditional_entropy(const DensityOperator& rho, Subsystem conditioned_on,
                           double rank_tol = kRankTol);

/// Entropy in bits recomputed from an already-built amplitude.
double conditional_entropy_from(const DensityOperator& rho, const ConditionalAmplitude& amp,
                                double rank_tol = kRankTol);

/// Verdict on "no eigenvalue of the conditional amplitude exceeds 1".
/// Fails (state certified inseparable) iff max eigenvalue > 1 + tol.
CriterionVerdict spectral_criterion(const DensityOperator& rho, Subsystem conditioned_on,
                                    double tol = kCriterionTol, double rank_tol = kRankTol);

/// Verdict on "conditional entropy is non-negative" (weaker than the
/// spectral criterion).  Fails iff the entropy < -tol bits.
CriterionVerdict entropic_criterion(const DensityOperator& rho, Subsystem conditioned_on,
                                    double tol = kCriterionTol, double rank_tol = kRankTol);

/// Finite-n product-formula approximant
/// [rho_AB^(1/n) (1_A (x) rho_B)^(-1/n)]^n with spectral fractional powers.
/// The raw (generally non-Hermitian) product is returned together with its
/// measured deviation from Hermiticity; a convergence witness for
/// conditional_amplitude, not a production path.
struct TrotterResult {
  ComplexMatrix matrix;
  double hermiticity_deviation = 0.0;
};

TrotterResult trotter_approximation(const DensityOperator& rho, int n,
                                    double rank_tol = kRankTol);

}  // namespace sepscope

#endif  // SEPSCOPE_CONDITIONAL_HPP
