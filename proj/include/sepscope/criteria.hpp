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

#ifndef SEPSCOPE_CRITERIA_HPP
#define SEPSCOPE_CRITERIA_HPP

#include <array>
#include <optional>
#include <string_view>

#include "sepscope/linalg.hpp"

namespace sepscope {

/// The seven separability criteria evaluated by the toolkit.  Each is a
/// necessary condition: failing any one certifies the state inseparable.
enum class Criterion {
  Lambda,                // min eig of 1_A (x) rho_B - rho_AB        >= 0
  DualLambda,            // min eig of rho_A (x) 1_B - rho_AB        >= 0
  Symmetric,             // min eig of the doubly flipped operator   >= 0
  PartialTransposeA,     // min eig of rho^(T_A)                     >= 0
  PartialTransposeB,     // min eig of rho^(T_B)                     >= 0
  SpectralConditional,   // max eig of the conditional amplitude     <= 1
  EntropicConditional,   // conditional entropy (bits)               >= 0
};

inline constexpr std::array<Criterion, 7> kAllCriteria = {
    Criterion::Lambda,           Criterion::DualLambda,
    Criterion::Symmetric,        Criterion::PartialTransposeA,
    Criterion::PartialTransposeB, Criterion::SpectralConditional,
    Criterion::EntropicConditional,
};

std::string_view criterion_name(Criterion c);
std::optional<Criterion> criterion_from_name(std::string_view name);

/// Decision record for one criterion: the full spectrum of the mapped (or
/// derived) operator, the scalar decision statistic, and the verdict at the
/// given tolerance.
struct CriterionVerdict {
  Criterion criterion;
  double statistic = 0.0;
  Spectrum spectrum;
  bool passes = true;
  double tolerance = kCriterionTol;
};

/// passes <=> statistic is on the pass side of the criterion's threshold
/// (0, or 1 for SpectralConditional) within tol.
bool criterion_passes(Criterion c, double statistic, double tol);

}  // namespace sepscope

#endif  // SEPSCOPE_CRITERIA_HPP
