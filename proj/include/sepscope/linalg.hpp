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

#ifndef SEPSCOPE_LINALG_HPP
#define SEPSCOPE_LINALG_HPP

#include <complex>
#include <functional>

#include <Eigen/Dense>

#include "sepscope/errors.hpp"

namespace sepscope {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;

/// Eigenvalues at or below this cutoff count as kernel directions.  Absolute,
/// calibrated for unit-trace operators at desk scale (dim <= ~100).
inline constexpr double kRankTol = 1e-10;

/// Slack for pass/fail decisions of the separability criteria.
inline constexpr double kCriterionTol = 1e-9;

/// Hermiticity slack, relative to the largest entry magnitude.
inline constexpr double kHermTolFactor = 1e-10;

/// Largest entry magnitude (max norm).
double max_abs(const ComplexMatrix& m);

/// Square complex matrix validated self-adjoint within
/// tol_factor * max|entry|, then symmetrized so that downstream spectral
/// code sees an exactly Hermitian matrix.
class HermitianOperator {
 public:
  explicit HermitianOperator(ComplexMatrix m, double tol_factor = kHermTolFactor);

  const ComplexMatrix& matrix() const { return mat_; }
  Eigen::Index dim() const { return mat_.rows(); }
  double trace() const { return mat_.trace().real(); }

 private:
  ComplexMatrix mat_;
};

/// Real eigenvalues sorted ascending, with multiplicity.
struct Spectrum {
  RealVector values;

  Eigen::Index dim() const { return values.size(); }
  double min() const { return values(0); }
  double max() const { return values(values.size() - 1); }
};

struct EigenSystem {
  Spectrum spectrum;
  ComplexMatrix vectors;  // orthonormal columns, ascending eigenvalue order
};

/// Dense Hermitian eigendecomposition, H = V diag(values) V^dagger.
/// Deterministic for a fixed input; under degeneracy only the spectrum and
/// spectral projectors are meaningful, never individual eigenvectors.
EigenSystem hermitian_eig(const HermitianOperator& h);

/// Eigenvalues only.
Spectrum hermitian_spectrum(const HermitianOperator& h);

/// Spectral f(H): applies f to each eigenvalue and reassembles.  With
/// support_only, eigenvalues <= rank_tol are treated as kernel directions and
/// map to zero (f is applied only on the support).  Throws DomainError if f
/// is non-finite at a retained eigenvalue.
HermitianOperator matrix_function(const HermitianOperator& h,
                                  const std::function<double(double)>& f,
                                  bool support_only = false,
                                  double rank_tol = kRankTol);

/// Projector onto the span of eigenvectors with eigenvalue > rank_tol.
HermitianOperator support_projector(const EigenSystem& es, double rank_tol = kRankTol);

/// Number of eigenvalues above rank_tol.
int support_dimension(const Spectrum& s, double rank_tol = kRankTol);

}  // namespace sepscope

#endif  // SEPSCOPE_LINALG_HPP
