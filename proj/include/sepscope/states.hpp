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

#ifndef SEPSCOPE_STATES_HPP
#define SEPSCOPE_STATES_HPP

#include <cstdint>
#include <map>
#include <string>

#include "sepscope/bipartite.hpp"

namespace sepscope {

/// The named reference-state families.
enum class NamedState {
  Werner,             // x * singlet + (1-x)/4 * identity
  GisinMixture,       // x |psi><psi| + (1-x)/2 (|00><00| + |11><11|)
  SingletPlusGround,  // x * singlet + (1-x) |00><00|
  HorodeckiTwoQubit,  // p |psi1><psi1| + (1-p) |psi2><psi2|
  Horodecki3x3,       // 3x3 state with positive partial transpose, param a
  Horodecki2x4,       // 2x4 state with positive partial transpose, param b
  Bell,               // which = 0..3 -> Phi+, Phi-, Psi+, Psi-
  ProductPure,        // Bloch angles theta_a, phi_a, theta_b, phi_b
  MaximallyMixed,     // d_a, d_b
};

struct NamedStateSpec {
  NamedState name;
  std::map<std::string, double> params;

  bool operator==(const NamedStateSpec&) const = default;
};

std::string_view named_state_name(NamedState s);
std::optional<NamedState> named_state_from_name(std::string_view name);

/// Builds the exact catalog matrix for the spec.  Parameter ranges are
/// enforced per family; violations raise ValidationError naming the bound.
DensityOperator construct(const NamedStateSpec& spec);

/// Convenience: the four Bell states (which = 0..3 as in NamedState::Bell).
DensityOperator bell_state(int which);
DensityOperator singlet_state();
DensityOperator maximally_mixed(int d_a, int d_b);

/// G G^dagger / Tr(G G^dagger) with G a (d_a*d_b) x rank matrix of
/// independent standard complex Gaussians from a seeded generator.  The same
/// seed reproduces the state bit for bit.
DensityOperator random_density(int d_a, int d_b, int rank, std::uint64_t seed);

/// Convex mixture of `terms` random pure product states with
/// Dirichlet-uniform weights.  Separable by construction: the oracle class
/// for the criterion property suites.
DensityOperator random_separable(int d_a, int d_b, int terms, std::uint64_t seed);

/// Haar-distributed unitary (QR of a complex Gaussian matrix with the R
/// diagonal phase fixed).
ComplexMatrix random_unitary(int dim, std::uint64_t seed);

/// U_A (x) U_B with independent Haar factors.
ComplexMatrix random_product_unitary(int d_a, int d_b, std::uint64_t seed);

/// Tensor product of two bipartite states regrouped to the (AA')|(BB')
/// bipartition.  Guards against products larger than 64 dimensions.
DensityOperator dilute(const DensityOperator& inner, const DensityOperator& outer);

}  // namespace sepscope

#endif  // SEPSCOPE_STATES_HPP
