// Copyright 2026 The channel-order Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CHORDER_LP_H_
#define CHORDER_LP_H_

#include <cstddef>

#include "chorder/matrix.h"

namespace chorder {

// Feasibility problem {x >= 0 : A x = b}.
struct LpProblem {
  Matrix a;
  Vector b;
};

struct LpResult {
  bool feasible = false;
  // Optimal sum of artificial slacks; zero (up to round-off) iff feasible.
  double phase_one_objective = 0.0;
  // Basic solution with tiny negatives clamped to zero.
  Vector x;
  // max |A x - b| for the returned x.
  double residual = 0.0;
  int pivots = 0;
};

inline constexpr double kLpTol = 1e-9;

// Phase-one primal simplex on a dense tableau with Bland's anti-cycling rule.
// Rows with negative right-hand side are negated up front, so every
// artificial starts basic and nonnegative.
LpResult solve_phase_one(const LpProblem& problem, double tol = kLpTol);

}  // namespace chorder

#endif  // CHORDER_LP_H_
