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

#ifndef SEPSCOPE_QUBIT_GEOMETRY_HPP
#define SEPSCOPE_QUBIT_GEOMETRY_HPP

#include "sepscope/bipartite.hpp"
#include "sepscope/maps.hpp"

namespace sepscope {

const ComplexMatrix& pauli_x();
const ComplexMatrix& pauli_y();
const ComplexMatrix& pauli_z();

/// Real 3-vector parameterizing a qubit state inside the unit sphere.
struct BlochVector {
  Eigen::Vector3d r;
};

/// Expansion of a two-qubit operator over Pauli tensor products: two
/// marginal vectors and the 3x3 correlation matrix.
struct HSDecomposition {
  Eigen::Vector3d r;
  Eigen::Vector3d s;
  Eigen::Matrix3d t;
};

/// Diagonal of the correlation matrix for states with vanishing marginals.
struct TDiagonalVector {
  Eigen::Vector3d t;
};

enum class TStateRegion {
  OutsideTetrahedron,   // not a valid state
  SeparableOctahedron,  // valid and separable
  EntangledShell,       // valid and inseparable
};

std::string_view t_state_region_name(TStateRegion r);
std::optional<TStateRegion> t_state_region_from_name(std::string_view name);

/// r_k = Tr(rho sigma_k) for a 2x2 Hermitian operator.
BlochVector bloch_vector(const HermitianOperator& rho);

/// Pauli expansion coefficients of a 2x2-shaped state.
HSDecomposition hs_decompose(const DensityOperator& rho);

/// Rebuilds the 4x4 operator from its coefficients.  Defined for any
/// (r, s, t); the result need not be positive — callers check.
HermitianOperator hs_compose(const HSDecomposition& d);

/// The sign-flip action of the three maps on the coefficients:
/// Lambda -> (-r, s, -t), DualLambda -> (r, -s, -t), Symmetric -> (-r, -s, t).
HSDecomposition map_action_on_hs(const HSDecomposition& d, MapKind map);

/// Classifies a T-diagonal point: outside the state tetrahedron (vertices
/// (-1,1,1), (1,-1,1), (1,1,-1), (-1,-1,-1)), inside the separable
/// octahedron (|t|_1 <= 1), or in the entangled shell between them.
TStateRegion t_state_region(const TDiagonalVector& t, double tol = kCriterionTol);

/// The unitary V whose column basis turns the doubly-flipped map into plain
/// complex conjugation; satisfies V V^T = antidiag(1, -1, -1, 1).
ComplexMatrix magic_basis();

/// V (V^dagger rho V)^* V^dagger; equals symmetric_map on two qubits.
HermitianOperator magic_conjugation(const DensityOperator& rho);

}  // namespace sepscope

#endif  // SEPSCOPE_QUBIT_GEOMETRY_HPP
