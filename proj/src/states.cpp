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

#include "sepscope/states.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

namespace sepscope {

namespace {

using namespace std::complex_literals;

/// Seeded Gaussian source.  mt19937_64 has a bit-exact specified sequence;
/// the Box-Muller transform is spelled out here so the Gaussian stream does
/// not depend on the standard library's normal_distribution.
class GaussianSource {
 public:
  explicit GaussianSource(std::uint64_t seed) : engine_(seed) {}

  double uniform() {  // in [0, 1)
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  double gaussian() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    const double u1 = 1.0 - uniform();  // (0, 1], keeps log finite
    const double u2 = uniform();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    spare_ = radius * std::sin(angle);
    has_spare_ = true;
    return radius * std::cos(angle);
  }

  Complex complex_gaussian() {
    const double re = gaussian();
    const double im = gaussian();
    return {re, im};
  }

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

Eigen::VectorXcd random_pure(int dim, GaussianSource& src) {
  Eigen::VectorXcd v(dim);
  for (int i = 0; i < dim; ++i) v(i) = src.complex_gaussian();
  return v / v.norm();
}

double get_param(const NamedStateSpec& spec, const std::string& key, double fallback,
                 bool required) {
  auto it = spec.params.find(key);
  if (it != spec.params.end()) return it->second;
  if (required) {
    std::ostringstream os;
    os << named_state_name(spec.name) << ": missing required parameter '" << key << "'";
    throw ValidationError(os.str());
  }
  return fallback;
}

void check_known_params(const NamedStateSpec& spec, std::initializer_list<const char*> known) {
  for (const auto& [key, value] : spec.params) {
    bool ok = false;
    for (const char* k : known) {
      if (key == k) { ok = true; break; }
    }
    if (!ok) {
      std::ostringstream os;
      os << named_state_name(spec.name) << ": unknown parameter '" << key << "'";
      throw ValidationError(os.str());
    }
  }
}

void check_range(const char* family, const char* name, double value, double lo, double hi,
                 bool open_lo = false, bool open_hi = false) {
  const bool bad_lo = open_lo ? value <= lo : value < lo;
  const bool bad_hi = open_hi ? value >= hi : value > hi;
  if (bad_lo || bad_hi) {
    std::ostringstream os;
    os << family << ": parameter " << name << " = " << value << " outside " << (open_lo ? "(" : "[")
       << lo << ", " << hi << (open_hi ? ")" : "]");
    throw ValidationError(os.str());
  }
}

/// Resolves the amplitude pair (a, b) with a^2 + b^2 = 1 from params that may
/// give either or both components.
std::pair<double, double> resolve_amplitudes(const NamedStateSpec& spec, const char* family) {
  const bool has_a = spec.params.count("a") > 0;
  const bool has_b = spec.params.count("b") > 0;
  double a, b;
  if (has_a && has_b) {
    a = spec.params.at("a");
    b = spec.params.at("b");
    if (std::abs(a * a + b * b - 1.0) > 1e-9) {
      std::ostringstream os;
      os << family << ": a^2 + b^2 = " << a * a + b * b << ", must equal 1";
      throw ValidationError(os.str());
    }
  } else if (has_a) {
    a = spec.params.at("a");
    check_range(family, "a", a, -1.0, 1.0);
    b = std::sqrt(1.0 - a * a);
  } else if (has_b) {
    b = spec.params.at("b");
    check_range(family, "b", b, -1.0, 1.0);
    a = std::sqrt(1.0 - b * b);
  } else {
    std::ostringstream os;
    os << family << ": missing amplitude parameter 'a' (or 'b')";
    throw ValidationError(os.str());
  }
  return {a, b};
}

DensityOperator make_state(ComplexMatrix m, int d_a, int d_b) {
  return DensityOperator(HermitianOperator(std::move(m)), BipartiteShape{d_a, d_b});
}

DensityOperator construct_werner(const NamedStateSpec& spec) {
  check_known_params(spec, {"x"});
  const double x = get_param(spec, "x", 0.0, true);
  check_range("werner", "x", x, 0.0, 1.0);
  ComplexMatrix m = ComplexMatrix::Zero(4, 4);
  m(0, 0) = m(3, 3) = (1.0 - x) / 4.0;
  m(1, 1) = m(2, 2) = (1.0 + x) / 4.0;
  m(1, 2) = m(2, 1) = -x / 2.0;
  return make_state(std::move(m), 2, 2);
}

DensityOperator construct_gisin(const NamedStateSpec& spec) {
  check_known_params(spec, {"x", "a", "b"});
  const double x = get_param(spec, "x", 0.0, true);
  check_range("gisin", "x", x, 0.0, 1.0);
  const auto [a, b] = resolve_amplitudes(spec, "gisin");
  ComplexMatrix m = ComplexMatrix::Zero(4, 4);
  m(0, 0) = m(3, 3) = (1.0 - x) / 2.0;
  m(1, 1) = x * a * a;
  m(2, 2) = x * b * b;
  m(1, 2) = m(2, 1) = x * a * b;
  return make_state(std::move(m), 2, 2);
}

DensityOperator construct_singlet_plus_ground(const NamedStateSpec& spec) {
  check_known_params(spec, {"x"});
  const double x = get_param(spec, "x", 0.0, true);
  check_range("singlet_plus_ground", "x", x, 0.0, 1.0);
  ComplexMatrix m = ComplexMatrix::Zero(4, 4);
  m(0, 0) = 1.0 - x;
  m(1, 1) = m(2, 2) = x / 2.0;
  m(1, 2) = m(2, 1) = -x / 2.0;
  return make_state(std::move(m), 2, 2);
}

DensityOperator construct_horodecki_two_qubit(const NamedStateSpec& spec) {
  check_known_params(spec, {"p", "a", "b"});
  const double p = get_param(spec, "p", 0.0, true);
  check_range("horodecki_two_qubit", "p", p, 0.0, 1.0);
  const auto [a, b] = resolve_amplitudes(spec, "horodecki_two_qubit");
  if (a <= 0.0 || b <= 0.0) {
    std::ostringstream os;
    os << "horodecki_two_qubit: amplitudes must be positive, got a = " << a << ", b = " << b;
    throw ValidationError(os.str());
  }
  ComplexMatrix m = ComplexMatrix::Zero(4, 4);
  m(0, 0) = p * a * a;
  m(3, 3) = p * b * b;
  m(0, 3) = m(3, 0) = p * a * b;
  m(1, 1) = (1.0 - p) * a * a;
  m(2, 2) = (1.0 - p) * b * b;
  m(1, 2) = m(2, 1) = (1.0 - p) * a * b;
  return make_state(std::move(m), 2, 2);
}

DensityOperator construct_horodecki3x3(const NamedStateSpec& spec) {
  check_known_params(spec, {"a"});
  const double a = get_param(spec, "a", 0.0, true);
  check_range("horodecki3x3", "a", a, 0.0, 1.0, /*open_lo=*/true, /*open_hi=*/true);
  ComplexMatrix m = ComplexMatrix::Zero(9, 9);
  for (int i : {0, 4, 8})
    for (int j : {0, 4, 8}) m(i, j) = a;
  for (int i : {1, 2, 3, 5, 7}) m(i, i) = a;
  m(6, 6) = (1.0 + a) / 2.0;
  m(8, 8) = (1.0 + a) / 2.0;
  m(6, 8) = m(8, 6) = std::sqrt(1.0 - a * a) / 2.0;
  return make_state(m / (1.0 + 8.0 * a), 3, 3);
}

DensityOperator construct_horodecki2x4(const NamedStateSpec& spec) {
  check_known_params(spec, {"b"});
  const double b = get_param(spec, "b", 0.0, true);
  check_range("horodecki2x4", "b", b, 0.0, 1.0, /*open_lo=*/true, /*open_hi=*/true);
  ComplexMatrix m = ComplexMatrix::Zero(8, 8);
  for (int i : {0, 1, 2, 3, 5, 6}) m(i, i) = b;
  m(0, 5) = m(5, 0) = b;
  m(1, 6) = m(6, 1) = b;
  m(2, 7) = m(7, 2) = b;
  m(4, 4) = m(7, 7) = (1.0 + b) / 2.0;
  m(4, 7) = m(7, 4) = std::sqrt(1.0 - b * b) / 2.0;
  return make_state(m / (1.0 + 7.0 * b), 2, 4);
}

DensityOperator construct_bell(const NamedStateSpec& spec) {
  check_known_params(spec, {"which"});
  const double which_raw = get_param(spec, "which", 0.0, true);
  const int which = static_cast<int>(which_raw);
  if (which_raw != which || which < 0 || which > 3) {
    std::ostringstream os;
    os << "bell: parameter which = " << which_raw << " must be an integer in [0, 3]";
    throw ValidationError(os.str());
  }
  return bell_state(which);
}

DensityOperator construct_product_pure(const NamedStateSpec& spec) {
  check_known_params(spec, {"theta_a", "phi_a", "theta_b", "phi_b"});
  const double ta = get_param(spec, "theta_a", 0.0, false);
  const double pa = get_param(spec, "phi_a", 0.0, false);
  const double tb = get_param(spec, "theta_b", 0.0, false);
  const double pb = get_param(spec, "phi_b", 0.0, false);
  const auto qubit = [](double theta, double phi) {
    Eigen::Vector2cd v;
    v << std::cos(theta / 2.0), std::exp(1i * phi) * std::sin(theta / 2.0);
    return v;
  };
  const Eigen::Vector2cd va = qubit(ta, pa);
  const Eigen::Vector2cd vb = qubit(tb, pb);
  Eigen::Vector4cd v;
  v << va(0) * vb(0), va(0) * vb(1), va(1) * vb(0), va(1) * vb(1);
  return make_state(v * v.adjoint(), 2, 2);
}

DensityOperator construct_maximally_mixed(const NamedStateSpec& spec) {
  check_known_params(spec, {"d_a", "d_b"});
  const double da_raw = get_param(spec, "d_a", 2.0, false);
  const double db_raw = get_param(spec, "d_b", 2.0, false);
  const int da = static_cast<int>(da_raw);
  const int db = static_cast<int>(db_raw);
  if (da_raw != da || db_raw != db || da < 1 || db < 1) {
    throw ValidationError("maximally_mixed: d_a and d_b must be integers >= 1");
  }
  return maximally_mixed(da, db);
}

}  // namespace

std::string_view named_state_name(NamedState s) {
  switch (s) {
    case NamedState::Werner: return "werner";
    case NamedState::GisinMixture: return "gisin";
    case NamedState::SingletPlusGround: return "singlet_plus_ground";
    case NamedState::HorodeckiTwoQubit: return "horodecki_two_qubit";
    case NamedState::Horodecki3x3: return "horodecki3x3";
    case NamedState::Horodecki2x4: return "horodecki2x4";
    case NamedState::Bell: return "bell";
    case NamedState::ProductPure: return "product_pure";
    case NamedState::MaximallyMixed: return "maximally_mixed";
  }
  return "unknown";
}

std::optional<NamedState> named_state_from_name(std::string_view name) {
  for (NamedState s :
       {NamedState::Werner, NamedState::GisinMixture, NamedState::SingletPlusGround,
        NamedState::HorodeckiTwoQubit, NamedState::Horodecki3x3, NamedState::Horodecki2x4,
        NamedState::Bell, NamedState::ProductPure, NamedState::MaximallyMixed}) {
    if (named_state_name(s) == name) return s;
  }
  return std::nullopt;
}

DensityOperator construct(const NamedStateSpec& spec) {
  switch (spec.name) {
    case NamedState::Werner: return construct_werner(spec);
    case NamedState::GisinMixture: return construct_gisin(spec);
    case NamedState::SingletPlusGround: return construct_singlet_plus_ground(spec);
    case NamedState::HorodeckiTwoQubit: return construct_horodecki_two_qubit(spec);
    case NamedState::Horodecki3x3: return construct_horodecki3x3(spec);
    case NamedState::Horodecki2x4: return construct_horodecki2x4(spec);
    case NamedState::Bell: return construct_bell(spec);
    case NamedState::ProductPure: return construct_product_pure(spec);
    case NamedState::MaximallyMixed: return construct_maximally_mixed(spec);
  }
  throw ValidationError("construct: unknown state family");
}

DensityOperator bell_state(int which) {
  if (which < 0 || which > 3) {
    throw ValidationError("bell_state: which must be in [0, 3]");
  }
  Eigen::Vector4cd v = Eigen::Vector4cd::Zero();
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  switch (which) {
    case 0: v(0) = inv_sqrt2; v(3) = inv_sqrt2; break;   // Phi+
    case 1: v(0) = inv_sqrt2; v(3) = -inv_sqrt2; break;  // Phi-
    case 2: v(1) = inv_sqrt2; v(2) = inv_sqrt2; break;   // Psi+
    case 3: v(1) = inv_sqrt2; v(2) = -inv_sqrt2; break;  // Psi-
  }
  return DensityOperator(HermitianOperator(v * v.adjoint()), BipartiteShape{2, 2});
}

DensityOperator singlet_state() { return bell_state(3); }

DensityOperator maximally_mixed(int d_a, int d_b) {
  const int n = d_a * d_b;
  return DensityOperator(HermitianOperator(ComplexMatrix::Identity(n, n) / n),
                         BipartiteShape{d_a, d_b});
}

DensityOperator random_density(int d_a, int d_b, int rank, std::uint64_t seed) {
  const int n = d_a * d_b;
  if (n < 1) throw ValidationError("random_density: dimensions must be >= 1");
  if (rank < 1 || rank > n) {
    std::ostringstream os;
    os << "random_density: rank " << rank << " outside [1, " << n << "]";
    throw ValidationError(os.str());
  }
  GaussianSource src(seed);
  ComplexMatrix g(n, rank);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < rank; ++j) g(i, j) = src.complex_gaussian();
  ComplexMatrix m = g * g.adjoint();
  m /= m.trace().real();
  return DensityOperator(HermitianOperator(std::move(m)), BipartiteShape{d_a, d_b});
}

DensityOperator random_separable(int d_a, int d_b, int terms, std::uint64_t seed) {
  if (terms < 1) throw ValidationError("random_separable: terms must be >= 1");
  GaussianSource src(seed);
  Eigen::VectorXd weights(terms);
  for (int k = 0; k < terms; ++k) weights(k) = -std::log(1.0 - src.uniform());
  weights /= weights.sum();

  const int n = d_a * d_b;
  ComplexMatrix m = ComplexMatrix::Zero(n, n);
  for (int k = 0; k < terms; ++k) {
    const Eigen::VectorXcd va = random_pure(d_a, src);
    const Eigen::VectorXcd vb = random_pure(d_b, src);
    Eigen::VectorXcd v(n);
    for (int i = 0; i < d_a; ++i)
      for (int j = 0; j < d_b; ++j) v(i * d_b + j) = va(i) * vb(j);
    m += weights(k) * (v * v.adjoint());
  }
  return DensityOperator(HermitianOperator(std::move(m)), BipartiteShape{d_a, d_b});
}

ComplexMatrix random_unitary(int dim, std::uint64_t seed) {
  GaussianSource src(seed);
  ComplexMatrix g(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) g(i, j) = src.complex_gaussian();
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ();
  const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  // Fix the R diagonal phases so the distribution is Haar.
  for (int i = 0; i < dim; ++i) {
    const Complex rii = r(i, i);
    const double mag = std::abs(rii);
    q.col(i) *= mag > 0.0 ? rii / mag : Complex(1.0, 0.0);
  }
  return q;
}

ComplexMatrix random_product_unitary(int d_a, int d_b, std::uint64_t seed) {
  // Distinct derived seeds for the two factors.
  const ComplexMatrix ua = random_unitary(d_a, seed * 2654435761u + 1);
  const ComplexMatrix ub = random_unitary(d_b, seed * 2654435761u + 2);
  ComplexMatrix out(d_a * d_b, d_a * d_b);
  for (int i = 0; i < d_a; ++i)
    for (int j = 0; j < d_a; ++j) out.block(i * d_b, j * d_b, d_b, d_b) = ua(i, j) * ub;
  return out;
}

DensityOperator dilute(const DensityOperator& inner, const DensityOperator& outer) {
  const int total = inner.shape().total() * outer.shape().total();
  if (total > 64) {
    std::ostringstream os;
    os << "dilute: product dimension " << total << " exceeds the cap of 64";
    throw ValidationError(os.str());
  }
  const HermitianOperator prod = tensor(inner.op(), outer.op());
  const BipartiteOperator regrouped = permute_to_bipartition(
      prod, FourFactorShape{inner.shape().dim_a, inner.shape().dim_b, outer.shape().dim_a,
                            outer.shape().dim_b});
  return DensityOperator(regrouped.op, regrouped.shape);
}

}  // namespace sepscope
