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

#include <cmath>

#include "sepscope/states.hpp"
#include "test_support.hpp"

using namespace sepscope;
using namespace sepscope::test;

namespace {

DensityOperator random_two_qubit(int seed) { return random_density(2, 2, 4, seed); }

HermitianOperator map_matrix(const DensityOperator& rho, MapKind map) {
  switch (map) {
    case MapKind::Lambda: return lambda_map(rho).op;
    case MapKind::DualLambda: return dual_lambda_map(rho).op;
    case MapKind::Symmetric: return symmetric_map(rho).op;
  }
  throw std::logic_error("unreachable");
}

}  // namespace

TEST_SUITE_BEGIN("qubit_geometry");

TEST_CASE("bloch vectors of the catalog states") {
  const HermitianOperator mixed(ComplexMatrix(0.5 * ComplexMatrix::Identity(2, 2)));
  CHECK(bloch_vector(mixed).r.norm() <= 1e-14);

  ComplexMatrix p0 = ComplexMatrix::Zero(2, 2);
  p0(0, 0) = 1.0;
  const Eigen::Vector3d ground = bloch_vector(HermitianOperator(p0)).r;
  CHECK((ground - Eigen::Vector3d(0, 0, 1)).norm() <= 1e-14);

  ComplexMatrix m(2, 2);
  m << 0.5, 0.25, 0.25, 0.5;  // (1 + 0.5 sigma_x) / 2
  const Eigen::Vector3d r = bloch_vector(HermitianOperator(m)).r;
  CHECK((r - Eigen::Vector3d(0.5, 0, 0)).norm() <= 1e-14);

  CHECK_THROWS_AS(bloch_vector(HermitianOperator(ComplexMatrix::Identity(3, 3))), ShapeError);
}

TEST_CASE("hs decomposition of Bell and product states") {
  const HSDecomposition phi_minus = hs_decompose(bell_state(1));
  CHECK(phi_minus.r.norm() <= 1e-12);
  CHECK(phi_minus.s.norm() <= 1e-12);
  CHECK((phi_minus.t - Eigen::Vector3d(-1, 1, 1).asDiagonal().toDenseMatrix()).norm() <= 1e-12);

  const HSDecomposition psi_minus = hs_decompose(singlet_state());
  CHECK((psi_minus.t - Eigen::Vector3d(-1, -1, -1).asDiagonal().toDenseMatrix()).norm() <=
        1e-12);

  const HSDecomposition ground = hs_decompose(construct(
      NamedStateSpec{NamedState::ProductPure, {}}));  // |00><00|
  CHECK((ground.r - Eigen::Vector3d(0, 0, 1)).norm() <= 1e-12);
  CHECK((ground.s - Eigen::Vector3d(0, 0, 1)).norm() <= 1e-12);
  CHECK((ground.t - Eigen::Vector3d(0, 0, 1).asDiagonal().toDenseMatrix()).norm() <= 1e-12);
}

TEST_CASE("compose inverts decompose") {
  for (int k = 0; k < 25; ++k) {
    const DensityOperator rho = random_two_qubit(4000 + k);
    const HermitianOperator back = hs_compose(hs_decompose(rho));
    CHECK(max_entry_diff(back.matrix(), rho.matrix()) <= 1e-12);
  }
  // compose accepts coefficients that do not describe a state
  HSDecomposition wild;
  wild.r = Eigen::Vector3d(1, 1, 1);
  wild.s = Eigen::Vector3d(-1, 0.5, 0);
  wild.t = Eigen::Matrix3d::Identity() * 0.9;
  const HermitianOperator composed = hs_compose(wild);
  CHECK(hermitian_spectrum(composed).min() < -1e-3);
}

TEST_CASE("map actions on coefficients match the matrix-level maps") {
  for (MapKind map : {MapKind::Lambda, MapKind::DualLambda, MapKind::Symmetric}) {
    for (int k = 0; k < 34; ++k) {
      const DensityOperator rho = random_two_qubit(4100 + k);
      const HSDecomposition d = hs_decompose(rho);
      const HermitianOperator via_hs = hs_compose(map_action_on_hs(d, map));
      CHECK(max_entry_diff(via_hs.matrix(), map_matrix(rho, map).matrix()) <= 1e-10);
    }
  }
  // the sign rules themselves
  HSDecomposition d;
  d.r = Eigen::Vector3d(0.1, 0.2, 0.3);
  d.s = Eigen::Vector3d(-0.4, 0.5, -0.6);
  d.t = Eigen::Matrix3d::Identity() * 0.2;
  const HSDecomposition lam = map_action_on_hs(d, MapKind::Lambda);
  CHECK((lam.r + d.r).norm() == 0.0);
  CHECK((lam.s - d.s).norm() == 0.0);
  CHECK((lam.t + d.t).norm() == 0.0);
  const HSDecomposition dual = map_action_on_hs(d, MapKind::DualLambda);
  CHECK((dual.r - d.r).norm() == 0.0);
  CHECK((dual.s + d.s).norm() == 0.0);
  CHECK((dual.t + d.t).norm() == 0.0);
  const HSDecomposition sym = map_action_on_hs(d, MapKind::Symmetric);
  CHECK((sym.r + d.r).norm() == 0.0);
  CHECK((sym.s + d.s).norm() == 0.0);
  CHECK((sym.t - d.t).norm() == 0.0);
}

TEST_CASE("t-state regions of the catalog points") {
  CHECK(t_state_region(TDiagonalVector{Eigen::Vector3d(-1, -1, -1)}) ==
        TStateRegion::EntangledShell);
  CHECK(t_state_region(TDiagonalVector{Eigen::Vector3d(0, 0, 0)}) ==
        TStateRegion::SeparableOctahedron);
  CHECK(t_state_region(TDiagonalVector{Eigen::Vector3d(1, 0, 0)}) ==
        TStateRegion::SeparableOctahedron);
  CHECK(t_state_region(TDiagonalVector{Eigen::Vector3d(1, 1, 1)}) ==
        TStateRegion::OutsideTetrahedron);
}

TEST_CASE("entangled shell = valid state with invalid parity image") {
  std::mt19937 rng(31);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  const auto in_tetra = [](const Eigen::Vector3d& t) {
    return 1.0 - t(0) - t(1) - t(2) >= -kCriterionTol &&
           1.0 + t(0) + t(1) - t(2) >= -kCriterionTol &&
           1.0 + t(0) - t(1) + t(2) >= -kCriterionTol &&
           1.0 - t(0) + t(1) + t(2) >= -kCriterionTol;
  };
  for (int k = 0; k < 500; ++k) {
    const Eigen::Vector3d t(unit(rng), unit(rng), unit(rng));
    const TStateRegion region = t_state_region(TDiagonalVector{t});
    const bool shell = in_tetra(t) && !in_tetra(-t);
    CHECK((region == TStateRegion::EntangledShell) == shell);
  }
}

TEST_CASE("octahedron membership coincides with the lambda verdict on a grid") {
  // light grid here; the acceptance suite runs the full 21^3 version
  for (int i = 0; i <= 8; ++i) {
    for (int j = 0; j <= 8; ++j) {
      for (int k = 0; k <= 8; ++k) {
        const Eigen::Vector3d t(-1.0 + 0.25 * i, -1.0 + 0.25 * j, -1.0 + 0.25 * k);
        HSDecomposition d;
        d.r.setZero();
        d.s.setZero();
        d.t = t.asDiagonal();
        const auto state = DensityOperator::try_create(hs_compose(d), BipartiteShape{2, 2});
        const bool lambda_ok =
            state && hermitian_spectrum(lambda_map(*state).op).min() >= -1e-9;
        const bool in_octahedron =
            t_state_region(TDiagonalVector{t}) == TStateRegion::SeparableOctahedron;
        CHECK(in_octahedron == lambda_ok);
      }
    }
  }
}

TEST_CASE("gamma on a qubit is conjugation followed by the y rotation") {
  ComplexMatrix u_y(2, 2);
  u_y << 0.0, -1.0, 1.0, 0.0;
  for (int k = 0; k < 50; ++k) {
    const DensityOperator rho = random_density(2, 1, 2, 5000 + k);
    const HermitianOperator q(rho.matrix());
    const ComplexMatrix expected = u_y * rho.matrix().conjugate() * u_y.adjoint();
    CHECK(max_entry_diff(gamma(q).matrix(), expected) <= 1e-12);
    // Bloch parity
    const Eigen::Vector3d before = bloch_vector(q).r;
    const Eigen::Vector3d after = bloch_vector(gamma(q)).r;
    CHECK((before + after).norm() <= 1e-12);
  }
}

TEST_CASE("magic basis satisfies the conjugation identities") {
  const ComplexMatrix v = magic_basis();
  CHECK(max_entry_diff(v.adjoint() * v, ComplexMatrix::Identity(4, 4)) <= 1e-14);

  ComplexMatrix target = ComplexMatrix::Zero(4, 4);
  target(0, 3) = 1.0;
  target(1, 2) = -1.0;
  target(2, 1) = -1.0;
  target(3, 0) = 1.0;
  CHECK(max_entry_diff(v * v.transpose(), target) <= 1e-12);

  // the underlying rotation sends |00> to (|00> + |01> + |10> - |11>) / 2;
  // the basis matrix carries an extra phase i on that column
  Eigen::Vector4cd first = v.col(0);
  Eigen::Vector4cd expected;
  expected << 0.5, 0.5, 0.5, -0.5;
  expected *= Complex(0.0, 1.0);
  CHECK((first - expected).cwiseAbs().maxCoeff() <= 1e-14);
}

TEST_CASE("magic conjugation equals the symmetric map") {
  CHECK(max_entry_diff(magic_conjugation(singlet_state()).matrix(),
                       singlet_state().matrix()) <= 1e-12);
  for (int k = 0; k < 100; ++k) {
    const DensityOperator rho = random_two_qubit(6000 + k);
    CHECK(max_entry_diff(magic_conjugation(rho).matrix(), symmetric_map(rho).op.matrix()) <=
          1e-10);
  }
  CHECK_THROWS_AS(magic_conjugation(maximally_mixed(2, 3)), ShapeError);
}

TEST_CASE("bell-diagonal mixtures are fixed by the symmetric map") {
  std::mt19937 rng(47);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int k = 0; k < 20; ++k) {
    Eigen::Vector4d w;
    for (int i = 0; i < 4; ++i) w(i) = -std::log(1.0 - unit(rng));
    w /= w.sum();
    ComplexMatrix m = ComplexMatrix::Zero(4, 4);
    for (int i = 0; i < 4; ++i) m += w(i) * bell_state(i).matrix();
    const DensityOperator rho(HermitianOperator(m), BipartiteShape{2, 2});
    CHECK(max_entry_diff(symmetric_map(rho).op.matrix(), rho.matrix()) <= 1e-12);
    CHECK(max_entry_diff(magic_conjugation(rho).matrix(), rho.matrix()) <= 1e-10);
  }
}

TEST_SUITE_END();
