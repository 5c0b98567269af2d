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

#include "test_support.hpp"

using namespace sepscope;
using namespace sepscope::test;

namespace {

// Werner matrix written out by hand: the oracle for marginal and
// partial-transpose expectations below.
ComplexMatrix werner_matrix(double x) {
  ComplexMatrix m = ComplexMatrix::Zero(4, 4);
  m(0, 0) = m(3, 3) = (1.0 - x) / 4.0;
  m(1, 1) = m(2, 2) = (1.0 + x) / 4.0;
  m(1, 2) = m(2, 1) = -x / 2.0;
  return m;
}

ComplexMatrix singlet_matrix() {
  Eigen::Vector4cd v = Eigen::Vector4cd::Zero();
  v(1) = 1.0 / std::sqrt(2.0);
  v(2) = -1.0 / std::sqrt(2.0);
  return v * v.adjoint();
}

}  // namespace

TEST_SUITE_BEGIN("bipartite");

TEST_CASE("tensor product basics") {
  const HermitianOperator id2(ComplexMatrix::Identity(2, 2));
  CHECK(max_entry_diff(tensor(id2, id2).matrix(), ComplexMatrix::Identity(4, 4)) == 0.0);

  ComplexMatrix p0 = ComplexMatrix::Zero(2, 2);
  p0(0, 0) = 1.0;
  ComplexMatrix p1 = ComplexMatrix::Zero(2, 2);
  p1(1, 1) = 1.0;
  ComplexMatrix expected = ComplexMatrix::Zero(4, 4);
  expected(1, 1) = 1.0;  // |0>|1> is composite index 1 (A-major)
  CHECK(max_entry_diff(tensor(HermitianOperator(p0), HermitianOperator(p1)).matrix(),
                       expected) == 0.0);
}

TEST_CASE("(-sigma_y) (x) sigma_y is the antidiagonal (1,-1,-1,1) matrix") {
  ComplexMatrix sy(2, 2);
  sy << 0.0, Complex(0.0, -1.0), Complex(0.0, 1.0), 0.0;
  const HermitianOperator neg_sy(ComplexMatrix(-sy));
  const ComplexMatrix out = tensor(neg_sy, HermitianOperator(sy)).matrix();
  ComplexMatrix expected = ComplexMatrix::Zero(4, 4);
  expected(0, 3) = 1.0;
  expected(1, 2) = -1.0;
  expected(2, 1) = -1.0;
  expected(3, 0) = 1.0;
  CHECK(max_entry_diff(out, expected) <= 1e-15);
}

TEST_CASE("partial trace recovers factors and marginals") {
  const HermitianOperator a = random_hermitian(2, 11);
  const HermitianOperator b = random_hermitian(3, 12);
  const BipartiteOperator ab(tensor(a, b), BipartiteShape{2, 3});

  CHECK(max_entry_diff(partial_trace(ab, Subsystem::B).matrix(),
                       ComplexMatrix(b.trace() * a.matrix())) <= 1e-12);
  CHECK(max_entry_diff(partial_trace(ab, Subsystem::A).matrix(),
                       ComplexMatrix(a.trace() * b.matrix())) <= 1e-12);

  // singlet and Werner marginals are maximally mixed
  const BipartiteOperator singlet(HermitianOperator(singlet_matrix()), BipartiteShape{2, 2});
  CHECK(max_entry_diff(partial_trace(singlet, Subsystem::A).matrix(),
                       ComplexMatrix(0.5 * ComplexMatrix::Identity(2, 2))) <= 1e-12);
  for (double x : {0.0, 0.3, 0.7, 1.0}) {
    const BipartiteOperator w(HermitianOperator(werner_matrix(x)), BipartiteShape{2, 2});
    CHECK(max_entry_diff(partial_trace(w, Subsystem::A).matrix(),
                         ComplexMatrix(0.5 * ComplexMatrix::Identity(2, 2))) <= 1e-12);
  }
}

TEST_CASE("partial trace preserves the total trace and validates shapes") {
  const HermitianOperator h = random_hermitian(6, 21);
  const BipartiteOperator op(h, BipartiteShape{2, 3});
  CHECK(std::abs(partial_trace(op, Subsystem::A).trace() - h.trace()) <= 1e-12);
  CHECK(std::abs(partial_trace(op, Subsystem::B).trace() - h.trace()) <= 1e-12);

  CHECK_THROWS_AS(BipartiteOperator(h, BipartiteShape{2, 2}), ShapeError);
  CHECK_THROWS_AS(BipartiteOperator(h, BipartiteShape{0, 6}), ShapeError);
}

TEST_CASE("partial transpose: diagonal fixed point, singlet spectrum, involution") {
  ComplexMatrix diag = ComplexMatrix::Zero(4, 4);
  diag.diagonal() << 0.1, 0.2, 0.3, 0.4;
  const BipartiteOperator d(HermitianOperator(diag), BipartiteShape{2, 2});
  CHECK(max_entry_diff(partial_transpose(d, Subsystem::A).op.matrix(), diag) == 0.0);

  const BipartiteOperator singlet(HermitianOperator(singlet_matrix()), BipartiteShape{2, 2});
  const Spectrum s = hermitian_spectrum(partial_transpose(singlet, Subsystem::A).op);
  RealVector expected(4);
  expected << -0.5, 0.5, 0.5, 0.5;
  CHECK((s.values - expected).cwiseAbs().maxCoeff() <= 1e-12);

  const HermitianOperator h = random_hermitian(6, 5);
  const BipartiteOperator op(h, BipartiteShape{2, 3});
  for (Subsystem side : {Subsystem::A, Subsystem::B}) {
    const BipartiteOperator twice = partial_transpose(partial_transpose(op, side), side);
    CHECK(max_entry_diff(twice.op.matrix(), h.matrix()) == 0.0);
  }
}

TEST_CASE("partial transpose of the Werner matrix has the lifted-map spectrum") {
  for (double x : {0.0, 0.25, 0.5, 1.0}) {
    const BipartiteOperator w(HermitianOperator(werner_matrix(x)), BipartiteShape{2, 2});
    const Spectrum s = hermitian_spectrum(partial_transpose(w, Subsystem::A).op);
    RealVector expected(4);
    expected << (1.0 - 3.0 * x) / 4.0, (1.0 + x) / 4.0, (1.0 + x) / 4.0, (1.0 + x) / 4.0;
    std::sort(expected.data(), expected.data() + 4);
    CHECK((s.values - expected).cwiseAbs().maxCoeff() <= 1e-12);
  }
}

TEST_CASE("relation Tr_A[(1 (x) Y) M] = Y Tr_A[M]") {
  for (int da : {2, 3}) {
    for (int db : {2, 3}) {
      const HermitianOperator y = random_hermitian(db, 31 + 10 * da + db);
      const HermitianOperator m = random_hermitian(da * db, 37 + 10 * da + db);
      const BipartiteShape sh{da, db};
      const HermitianOperator lifted =
          tensor(HermitianOperator(ComplexMatrix::Identity(da, da)), y);
      const ComplexMatrix lhs =
          partial_trace_matrix(lifted.matrix() * m.matrix(), sh, Subsystem::A);
      const ComplexMatrix rhs =
          y.matrix() * partial_trace_matrix(m.matrix(), sh, Subsystem::A);
      CHECK(max_entry_diff(lhs, rhs) <= 1e-10);
    }
  }
}

TEST_CASE("permutation to the (AA')|(BB') split") {
  // product of two product states: every entry lands at the permuted position
  ComplexMatrix pa = ComplexMatrix::Zero(2, 2), pb = ComplexMatrix::Zero(2, 2);
  pa(0, 0) = 1.0;
  pb(1, 1) = 1.0;
  const HermitianOperator inner = tensor(HermitianOperator(pa), HermitianOperator(pb));
  ComplexMatrix qa = ComplexMatrix::Zero(2, 2), qb = ComplexMatrix::Zero(2, 2);
  qa(1, 1) = 1.0;
  qb(0, 0) = 1.0;
  const HermitianOperator outer = tensor(HermitianOperator(qa), HermitianOperator(qb));
  const BipartiteOperator out =
      permute_to_bipartition(tensor(inner, outer), FourFactorShape{2, 2, 2, 2});
  CHECK(out.shape == BipartiteShape{4, 4});
  // |0>_A |1>_B |1>_A' |0>_B' regroups to (a,a') = (0,1), (b,b') = (1,0):
  // row index (0*2+1)*4 + (1*2+0) = 6
  ComplexMatrix expected = ComplexMatrix::Zero(16, 16);
  expected(6, 6) = 1.0;
  CHECK(max_entry_diff(out.op.matrix(), expected) == 0.0);

  // permutation similarity: spectrum unchanged for a random input
  const HermitianOperator h = random_hermitian(16, 77);
  const Spectrum before = hermitian_spectrum(h);
  const Spectrum after =
      hermitian_spectrum(permute_to_bipartition(h, FourFactorShape{2, 2, 2, 2}).op);
  CHECK(max_spectrum_diff(before, after) <= 1e-12);

  // partial traces stay consistent: Tr over BB' of the output equals
  // Tr_B(inner) (x) Tr_B'(outer)
  const HermitianOperator x = random_hermitian(4, 91);
  const HermitianOperator y = random_hermitian(6, 92);
  const BipartiteOperator big =
      permute_to_bipartition(tensor(x, y), FourFactorShape{2, 2, 2, 3});
  const ComplexMatrix got = partial_trace(big, Subsystem::B).matrix();
  const ComplexMatrix want =
      kron(partial_trace(BipartiteOperator(x, BipartiteShape{2, 2}), Subsystem::B).matrix(),
           partial_trace(BipartiteOperator(y, BipartiteShape{2, 3}), Subsystem::B).matrix());
  CHECK(max_entry_diff(got, want) <= 1e-12);

  CHECK_THROWS_AS(permute_to_bipartition(h, FourFactorShape{2, 2, 2, 3}), ShapeError);
}

TEST_CASE("density operator validation") {
  CHECK_THROWS_WITH_AS(
      DensityOperator(HermitianOperator(ComplexMatrix::Identity(4, 4)), BipartiteShape{2, 2}),
      doctest::Contains("trace"), ValidationError);

  ComplexMatrix indef = ComplexMatrix::Zero(4, 4);
  indef.diagonal() << 1.5, -0.5, 0.0, 0.0;
  CHECK_THROWS_WITH_AS(DensityOperator(HermitianOperator(indef), BipartiteShape{2, 2}),
                       doctest::Contains("eigenvalue"), ValidationError);

  CHECK(DensityOperator::try_create(HermitianOperator(indef), BipartiteShape{2, 2}) ==
        std::nullopt);
  CHECK(DensityOperator::try_create(HermitianOperator(werner_matrix(0.5)),
                                    BipartiteShape{2, 2})
            .has_value());
}

TEST_SUITE_END();
