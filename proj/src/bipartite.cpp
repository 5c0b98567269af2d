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

#include "sepscope/bipartite.hpp"

#include <cmath>
#include <sstream>
#include <utility>

namespace sepscope {

namespace {

void check_shape(const HermitianOperator& op, const BipartiteShape& shape, const char* where) {
  if (shape.dim_a < 1 || shape.dim_b < 1) {
    std::ostringstream os;
    os << where << ": shape (" << shape.dim_a << "," << shape.dim_b << ") has a factor < 1";
    throw ShapeError(os.str());
  }
  if (shape.total() != op.dim()) {
    std::ostringstream os;
    os << where << ": shape (" << shape.dim_a << "," << shape.dim_b << ") does not factor dim "
       << op.dim();
    throw ShapeError(os.str());
  }
}

}  // namespace

BipartiteOperator::BipartiteOperator(HermitianOperator o, BipartiteShape s)
    : op(std::move(o)), shape(s) {
  check_shape(op, shape, "BipartiteOperator");
}

DensityOperator::DensityOperator(HermitianOperator op, BipartiteShape shape, double tol)
    : op_(std::move(op)), shape_(shape) {
  check_shape(op_, shape_, "DensityOperator");
  const double tr = op_.trace();
  if (std::abs(tr - 1.0) > tol) {
    std::ostringstream os;
    os << "DensityOperator: trace " << tr << " differs from 1 by more than " << tol;
    throw ValidationError(os.str());
  }
  const Spectrum s = hermitian_spectrum(op_);
  if (s.min() < -tol) {
    std::ostringstream os;
    os << "DensityOperator: minimum eigenvalue " << s.min() << " below -" << tol
       << ", not positive semidefinite";
    throw ValidationError(os.str());
  }
}

std::optional<DensityOperator> DensityOperator::try_create(HermitianOperator op,
                                                           BipartiteShape shape, double tol) {
  if (shape.dim_a < 1 || shape.dim_b < 1 || shape.total() != op.dim()) return std::nullopt;
  if (std::abs(op.trace() - 1.0) > tol) return std::nullopt;
  if (hermitian_spectrum(op).min() < -tol) return std::nullopt;
  return DensityOperator(std::move(op), shape, true);
}

HermitianOperator tensor(const HermitianOperator& x, const HermitianOperator& y) {
  const Eigen::Index dx = x.dim();
  const Eigen::Index dy = y.dim();
  ComplexMatrix out(dx * dy, dx * dy);
  for (Eigen::Index i = 0; i < dx; ++i) {
    for (Eigen::Index j = 0; j < dx; ++j) {
      out.block(i * dy, j * dy, dy, dy) = x.matrix()(i, j) * y.matrix();
    }
  }
  return HermitianOperator(std::move(out));
}

ComplexMatrix partial_trace_matrix(const ComplexMatrix& m, const BipartiteShape& shape,
                                   Subsystem over) {
  if (shape.dim_a < 1 || shape.dim_b < 1 || shape.total() != m.rows() || m.rows() != m.cols()) {
    std::ostringstream os;
    os << "partial_trace: shape (" << shape.dim_a << "," << shape.dim_b
       << ") does not factor a " << m.rows() << "x" << m.cols() << " matrix";
    throw ShapeError(os.str());
  }
  const int da = shape.dim_a;
  const int db = shape.dim_b;
  if (over == Subsystem::A) {
    ComplexMatrix out = ComplexMatrix::Zero(db, db);
    for (int a = 0; a < da; ++a) {
      out += m.block(a * db, a * db, db, db);
    }
    return out;
  }
  ComplexMatrix out = ComplexMatrix::Zero(da, da);
  for (int i = 0; i < da; ++i) {
    for (int j = 0; j < da; ++j) {
      out(i, j) = m.block(i * db, j * db, db, db).trace();
    }
  }
  return out;
}

HermitianOperator partial_trace(const BipartiteOperator& rho, Subsystem over) {
  return HermitianOperator(partial_trace_matrix(rho.op.matrix(), rho.shape, over));
}

HermitianOperator partial_trace(const DensityOperator& rho, Subsystem over) {
  return partial_trace(rho.bipartite(), over);
}

BipartiteOperator partial_transpose(const BipartiteOperator& rho, Subsystem over) {
  const int da = rho.shape.dim_a;
  const int db = rho.shape.dim_b;
  const ComplexMatrix& m = rho.op.matrix();
  ComplexMatrix out(m.rows(), m.cols());
  if (over == Subsystem::A) {
    // (a,b;c,d) -> (c,b;a,d)
    for (int a = 0; a < da; ++a)
      for (int c = 0; c < da; ++c)
        out.block(c * db, a * db, db, db) = m.block(a * db, c * db, db, db);
  } else {
    // transpose each B block in place
    for (int a = 0; a < da; ++a)
      for (int c = 0; c < da; ++c)
        out.block(a * db, c * db, db, db) = m.block(a * db, c * db, db, db).transpose();
  }
  return BipartiteOperator(HermitianOperator(std::move(out)), rho.shape);
}

BipartiteOperator partial_transpose(const DensityOperator& rho, Subsystem over) {
  return partial_transpose(rho.bipartite(), over);
}

BipartiteOperator permute_to_bipartition(const HermitianOperator& op4,
                                         const FourFactorShape& dims) {
  if (dims.dim_a < 1 || dims.dim_b < 1 || dims.dim_a2 < 1 || dims.dim_b2 < 1 ||
      dims.total() != op4.dim()) {
    std::ostringstream os;
    os << "permute_to_bipartition: factors (" << dims.dim_a << "," << dims.dim_b << ","
       << dims.dim_a2 << "," << dims.dim_b2 << ") do not factor dim " << op4.dim();
    throw ShapeError(os.str());
  }
  const int n = dims.total();
  const ComplexMatrix& m = op4.matrix();
  ComplexMatrix out(n, n);

  // old index: ((a*dB + b)*dA2 + a2)*dB2 + b2
  // new index: ((a*dA2 + a2)*dB + b)*dB2 + b2
  std::vector<int> perm(n);
  for (int a = 0; a < dims.dim_a; ++a)
    for (int b = 0; b < dims.dim_b; ++b)
      for (int a2 = 0; a2 < dims.dim_a2; ++a2)
        for (int b2 = 0; b2 < dims.dim_b2; ++b2) {
          const int old_idx = ((a * dims.dim_b + b) * dims.dim_a2 + a2) * dims.dim_b2 + b2;
          const int new_idx = ((a * dims.dim_a2 + a2) * dims.dim_b + b) * dims.dim_b2 + b2;
          perm[old_idx] = new_idx;
        }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out(perm[i], perm[j]) = m(i, j);

  return BipartiteOperator(HermitianOperator(std::move(out)),
                           BipartiteShape{dims.dim_a * dims.dim_a2, dims.dim_b * dims.dim_b2});
}

}  // namespace sepscope
