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

#ifndef SEPSCOPE_MAPS_HPP
#define SEPSCOPE_MAPS_HPP

#include <vector>

#include "sepscope/bipartite.hpp"
#include "sepscope/criteria.hpp"

namespace sepscope {

/// The three liftings of the trace-flip map to a bipartite space.
enum class MapKind { Lambda, DualLambda, Symmetric };

/// (Tr rho) * 1 - rho.  Positive map; on a qubit it is the spin flip
/// (time reversal).  Commutes with unitary conjugation.
HermitianOperator gamma(const HermitianOperator& rho);

/// Gamma on A, identity on B:  1_A (x) rho_B - rho_AB.  Maps every separable
/// state to a positive operator; output traces to (d_A - 1).
BipartiteOperator lambda_map(const DensityOperator& rho);

/// Identity on A, Gamma on B:  rho_A (x) 1_B - rho_AB.
BipartiteOperator dual_lambda_map(const DensityOperator& rho);

/// Gamma on both factors:
/// 1 (x) 1 - rho_A (x) 1 - 1 (x) rho_B + rho_AB.  Trace (d_A-1)(d_B-1);
/// spectrum-preserving for two qubits.
BipartiteOperator symmetric_map(const DensityOperator& rho);

/// Inverse of lambda_map: (d_A - 1)^-1 (1_A (x) lam_B) - lam_AB, where
/// lam_B = Tr_A.  Coincides with lambda_map itself when d_A = 2.
BipartiteOperator lambda_inverse(const BipartiteOperator& lam);

/// Inverse of symmetric_map; self-inverse when d_A = d_B = 2.
BipartiteOperator symmetric_inverse(const BipartiteOperator& mu);

/// Single criterion evaluations.
CriterionVerdict map_criterion(const DensityOperator& rho, MapKind map,
                               double tol = kCriterionTol);
CriterionVerdict partial_transpose_criterion(const DensityOperator& rho, Subsystem over,
                                             double tol = kCriterionTol);

struct CriterionReport {
  std::vector<CriterionVerdict> verdicts;  // order of kAllCriteria
  bool certified_inseparable = false;      // true iff any verdict fails
};

/// Evaluates all seven criteria on a state.  Each verdict carries the full
/// spectrum of its mapped (or derived) operator.
CriterionReport criterion_report(const DensityOperator& rho, double tol = kCriterionTol,
                                 double rank_tol = kRankTol);

}  // namespace sepscope

#endif  // SEPSCOPE_MAPS_HPP
