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

#include "sepscope/qubit_geometry.hpp"

#include <array>
#include <sstream>

namespace sepscope {

namespace {

using namespace std::complex_literals;

const std::array<ComplexMatrix, 3>& paulis() {
  static const std::array<ComplexMatrix, 3> p = [] {
    std::array<ComplexMatrix, 3> out;
    out[0] = ComplexMatrix{{0.0 + 0i, 1.0 + 0i}, {1.0 + 0i, 0.0 + 0i}};
    out[1] = ComplexMatrix{{0.0 + 0i, -1i}, {1i, 0.0 + 0i}};
    out[2] = ComplexMatrix{{1.0 + 0i, 0.0 + 0i}, {0.0 + 0i, -1.0 + 0i}};
    return out;
  }();
  return p;
}

void require_two_qubits(const BipartiteShape& sh, const char* where) {
  if (sh.dim_a != 2 || sh.dim_b != 2) {
    std::ostringstream os;
    os << where << ": requires a 2x2-shaped state, got (" << sh.dim_a << "," << sh.dim_b << ")";
    throw ShapeError(os.str());
  }
}

}  // namespace

const ComplexMatrix& pauli_x() { return paulis()[0]; }
const ComplexMatrix& pauli_y() { return paulis()[1]; }
const ComplexMatrix& pauli_z() { return paulis()[2]; }

std::string_view t_state_region_name(TStateRegion r) {
  switch (r) {
    case TStateRegion::OutsideTetrahedron: return "outside_tetrahedron";
    case TStateRegion::SeparableOctahedron: return "separable_octahedron";
    case TStateRegion::EntangledShell: return "entangled_shell";
  }
  return "unknown";
}

std::optional<TStateRegion> t_state_region_from_name(std::string_view name) {
  for (TStateRegion r : {TStateRegion::OutsideTetrahedron, TStateRegion::SeparableOctahedron,
                         TStateRegion::EntangledShell}) {
    if (t_state_region_name(r) == name) return r;
  }
  return std::nullopt;
}

BlochVector bloch_vector(const HermitianOperator& rho) {
  if (rho.dim() != 2) {
    std::ostringstream os;
    os << "bloch_vector: requires a 2x2 operator, got dim " << rho.dim();
    throw ShapeError(os.str());
  }
  Eigen::Vector3d r;
  for (int k = 0; k < 3; ++k) r(k) = (rho.matrix() * paulis()[k]).trace().real();
  return BlochVector{r};
}

HSDecomposition hs_decompose(const DensityOperator& rho) {
  require_two_qubits(rho.shape(), "hs_decompose");
  const ComplexMatrix& m = rho.matrix();
  const ComplexMatrix id = ComplexMatrix::Identity(2, 2);
  HSDecomposition d;
  for (int n = 0; n < 3; ++n) {
    d.r(n) = (m * tensor(HermitianOperator(paulis()[n]), HermitianOperator(id)).matrix())
                 .trace()
                 .real();
    d.s(n) = (m * tensor(HermitianOperator(id), HermitianOperator(paulis()[n])).matrix())
                 .trace()
                 .real();
    for (int k = 0; k < 3; ++k) {
      d.t(n, k) =
          (m * tensor(HermitianOperator(paulis()[n]), HermitianOperator(paulis()[k])).matrix())
              .trace()
              .real();
    }
  }
  const double bound = 1.0 + kCriterionTol;
  if (d.r.cwiseAbs().maxCoeff() > bound || d.s.cwiseAbs().maxCoeff() > bound ||
      d.t.cwiseAbs().maxCoeff() > bound) {
    throw ValidationError("hs_decompose: coefficient outside [-1, 1] — input is not a state");
  }
  return d;
}

HermitianOperator hs_compose(const HSDecomposition& d) {
  ComplexMatrix out = ComplexMatrix::Identity(4, 4);
  const ComplexMatrix id = ComplexMatrix::Identity(2, 2);
  for (int n = 0; n < 3; ++n) {
    out += d.r(n) * tensor(HermitianOperator(paulis()[n]), HermitianOperator(id)).matrix();
    out += d.s(n) * tensor(HermitianOperator(id), HermitianOperator(paulis()[n])).matrix();
    for (int k = 0; k < 3; ++k) {
      out += d.t(n, k) *
             tensor(HermitianOperator(paulis()[n]), HermitianOperator(paulis()[k])).matrix();
    }
  }
  return HermitianOperator(0.25 * out);
}

HSDecomposition map_action_on_hs(const HSDecomposition& d, MapKind map) {
  switch (map) {
    case MapKind::Lambda: return HSDecomposition{-d.r, d.s, -d.t};
    case MapKind::DualLambda: return HSDecomposition{d.r, -d.s, -d.t};
    case MapKind::Symmetric: return HSDecomposition{-d.r, -d.s, d.t};
  }
  throw ValidationError("map_action_on_hs: unknown map kind");
}

TStateRegion t_state_region(const TDiagonalVector& tv, double tol) {
  const Eigen::Vector3d& t = tv.t;
  // Facets of the tetrahedron spanned by the four fully-entangled vertices;
  // each facet value is 4x an eigenvalue of the composed state.
  const std::array<double, 4> facets = {
      1.0 - t(0) - t(1) - t(2),
      1.0 + t(0) + t(1) - t(2),
      1.0 + t(0) - t(1) + t(2),
      1.0 - t(0) + t(1) + t(2),
  };
  for (double f : facets) {
    if (f < -tol) return TStateRegion::OutsideTetrahedron;
  }
  if (t.lpNorm<1>() <= 1.0 + tol) return TStateRegion::SeparableOctahedron;
  return TStateRegion::EntangledShell;
}

ComplexMatrix magic_basis() {
  using namespace std::complex_literals;
  ComplexMatrix w(4, 4);
  w << 1, 1, 1, -1,
       1, 1, -1, 1,
       1, -1, 1, 1,
       -1, 1, 1, 1;
  w *= 0.5;
  Eigen::Vector4cd d(1i, 1.0 + 0i, 1.0 + 0i, 1i);
  return w * d.asDiagonal();
}

HermitianOperator magic_conjugation(const DensityOperator& rho) {
  require_two_qubits(rho.shape(), "magic_conjugation");
  const ComplexMatrix v = magic_basis();
  ComplexMatrix out = v * (v.adjoint() * rho.matrix() * v).conjugate() * v.adjoint();
  return HermitianOperator(std::move(out));
}

}  // namespace sepscope
