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

#include "sepscope/linalg.hpp"

#include <cmath>
#include <sstream>

namespace sepscope {

double max_abs(const ComplexMatrix& m) {
  if (m.size() == 0) return 0.0;
  return m.cwiseAbs().maxCoeff();
}

HermitianOperator::HermitianOperator(ComplexMatrix m, double tol_factor) {
  if (m.rows() != m.cols()) {
    std::ostringstream os;
    os << "HermitianOperator: matrix is " << m.rows() << "x" << m.cols() << ", not square";
    throw ValidationError(os.str());
  }
  if (!m.allFinite()) {
    throw ValidationError("HermitianOperator: matrix contains NaN or Inf entries");
  }
  const double scale = max_abs(m);
  // Absolute guard: operators that are numerically zero relative to the
  // unit-trace working scale carry roundoff with arbitrary relative
  // asymmetry and must still count as Hermitian.
  const double tol = tol_factor * scale + 1e-14;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = i; j < m.cols(); ++j) {
      const double dev = std::abs(m(i, j) - std::conj(m(j, i)));
      if (dev > tol) {
        std::ostringstream os;
        os << "HermitianOperator: entries (" << i << "," << j << ") and (" << j << "," << i
           << ") are not conjugate: |" << m(i, j) << " - conj(" << m(j, i) << ")| = " << dev
           << " > " << tol;
        throw ValidationError(os.str());
      }
    }
  }
  mat_ = 0.5 * (m + m.adjoint().eval());
}

EigenSystem hermitian_eig(const HermitianOperator& h) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h.matrix());
  if (solver.info() != Eigen::Success) {
    throw RankError("hermitian_eig: eigensolver failed to converge");
  }
  return EigenSystem{Spectrum{solver.eigenvalues()}, solver.eigenvectors()};
}

Spectrum hermitian_spectrum(const HermitianOperator& h) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h.matrix(), Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw RankError("hermitian_spectrum: eigensolver failed to converge");
  }
  return Spectrum{solver.eigenvalues()};
}

HermitianOperator matrix_function(const HermitianOperator& h,
                                  const std::function<double(double)>& f, bool support_only,
                                  double rank_tol) {
  const EigenSystem es = hermitian_eig(h);
  const Eigen::Index n = h.dim();
  RealVector fw = RealVector::Zero(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double lam = es.spectrum.values(i);
    if (support_only && lam <= rank_tol) continue;  // kernel direction -> 0
    const double val = f(lam);
    if (!std::isfinite(val)) {
      std::ostringstream os;
      os << "matrix_function: f is undefined at retained eigenvalue " << lam;
      throw DomainError(os.str());
    }
    fw(i) = val;
  }
  ComplexMatrix out = es.vectors * fw.asDiagonal() * es.vectors.adjoint();
  return HermitianOperator(std::move(out));
}

HermitianOperator support_projector(const EigenSystem& es, double rank_tol) {
  const Eigen::Index n = es.spectrum.values.size();
  ComplexMatrix p = ComplexMatrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    if (es.spectrum.values(i) > rank_tol) {
      p += es.vectors.col(i) * es.vectors.col(i).adjoint();
    }
  }
  return HermitianOperator(std::move(p));
}

int support_dimension(const Spectrum& s, double rank_tol) {
  int count = 0;
  for (Eigen::Index i = 0; i < s.values.size(); ++i) {
    if (s.values(i) > rank_tol) ++count;
  }
  return count;
}

}  // namespace sepscope
