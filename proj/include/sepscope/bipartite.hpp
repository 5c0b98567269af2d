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

#ifndef SEPSCOPE_BIPARTITE_HPP
#define SEPSCOPE_BIPARTITE_HPP

#include <optional>

#include "sepscope/linalg.hpp"

namespace sepscope {

enum class Subsystem { A, B };

/// Tensor-factor split of a bipartite operator.  Indexing is row-major with
/// the A index major: composite index = a * dim_b + b.
struct BipartiteShape {
  int dim_a = 0;
  int dim_b = 0;

  int total() const { return dim_a * dim_b; }
  bool operator==(const BipartiteShape&) const = default;
};

/// Hermitian operator carrying its bipartite shape.  No positivity or trace
/// constraint; map outputs and intermediates live here.
struct BipartiteOperator {
  BipartiteOperator(HermitianOperator o, BipartiteShape s);

  HermitianOperator op;
  BipartiteShape shape;
};

/// Unit-trace positive-semidefinite Hermitian operator with a bipartite shape.
class DensityOperator {
 public:
  DensityOperator(HermitianOperator op, BipartiteShape shape, double tol = 1e-9);

  /// Non-throwing validation, for scans over possibly-invalid candidates.
  static std::optional<DensityOperator> try_create(HermitianOperator op, BipartiteShape shape,
                                                   double tol = 1e-9);

  const HermitianOperator& op() const { return op_; }
  const ComplexMatrix& matrix() const { return op_.matrix(); }
  const BipartiteShape& shape() const { return shape_; }
  BipartiteOperator bipartite() const { return BipartiteOperator(op_, shape_); }

 private:
  DensityOperator(HermitianOperator op, BipartiteShape shape, bool /*checked*/)
      : op_(std::move(op)), shape_(shape) {}

  HermitianOperator op_;
  BipartiteShape shape_;
};

/// Kronecker product, A-index major: (X (x) Y)[i*dY+k, j*dY+l] = X(i,j) Y(k,l).
HermitianOperator tensor(const HermitianOperator& x, const HermitianOperator& y);

/// Tr_A or Tr_B on a raw matrix (no Hermiticity requirement).
ComplexMatrix partial_trace_matrix(const ComplexMatrix& m, const BipartiteShape& shape,
                                   Subsystem over);

/// Tr_A or Tr_B.  Output dimension is that of the remaining factor.
HermitianOperator partial_trace(const BipartiteOperator& rho, Subsystem over);
HermitianOperator partial_trace(const DensityOperator& rho, Subsystem over);

/// Transposes the indices of the chosen factor only.  Involutive.
BipartiteOperator partial_transpose(const BipartiteOperator& rho, Subsystem over);
BipartiteOperator partial_transpose(const DensityOperator& rho, Subsystem over);

/// Factor dimensions of an operator on A (x) B (x) A' (x) B'.
struct FourFactorShape {
  int dim_a = 0;
  int dim_b = 0;
  int dim_a2 = 0;
  int dim_b2 = 0;

  int total() const { return dim_a * dim_b * dim_a2 * dim_b2; }
};

/// Index reshuffle (a,b,a',b') -> ((a,a'),(b,b')): regroups a product of two
/// bipartite systems into the (AA')|(BB') split.  Spectrum-preserving.
BipartiteOperator permute_to_bipartition(const HermitianOperator& op4,
                                         const FourFactorShape& dims);

}  // namespace sepscope

#endif  // SEPSCOPE_BIPARTITE_HPP
