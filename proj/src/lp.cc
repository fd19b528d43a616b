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

#include "chorder/lp.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "chorder/error.h"
#include "chorder/kernels.h"

namespace chorder {
namespace {

constexpr double kReducedCostEps = 1e-12;
constexpr double kPivotEps = 1e-11;
constexpr int kMaxPivots = 200000;

}  // namespace

LpResult solve_phase_one(const LpProblem& problem, double tol) {
  const std::size_t m = problem.a.rows();
  const std::size_t n = problem.a.cols();
  if (problem.b.size() != m) fail(Errc::kDimensionMismatch, "LP right-hand side");

  // Columns: n structural, m artificial, 1 rhs. Row m is the objective row
  // holding reduced costs, with -(objective value) in the rhs slot.
  const std::size_t width = n + m + 1;
  const std::size_t rhs = n + m;
  Matrix t(m + 1, width);
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    const double sign = problem.b[i] < 0.0 ? -1.0 : 1.0;
    for (std::size_t j = 0; j < n; ++j) t(i, j) = sign * problem.a(i, j);
    t(i, n + i) = 1.0;
    t(i, rhs) = sign * problem.b[i];
    basis[i] = n + i;
    // Objective: minimise the artificial sum, so price out the basic
    // artificials from the cost row.
    kernels::axpy(-1.0, t.row(i), t.row(m));
    t(m, n + i) = 0.0;
  }

  LpResult result;
  for (;;) {
    std::size_t enter = n;
    for (std::size_t j = 0; j < n; ++j) {
      if (t(m, j) < -kReducedCostEps) {
        enter = j;
        break;
      }
    }
    if (enter == n) break;

    std::size_t leave = m;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < m; ++i) {
      const double coef = t(i, enter);
      if (coef <= kPivotEps) continue;
      const double ratio = std::max(0.0, t(i, rhs)) / coef;
      if (leave == m || ratio < best - 1e-15) {
        best = ratio;
        leave = i;
      } else if (ratio <= best + 1e-15 && basis[i] < basis[leave]) {
        leave = i;
      }
    }
    // Phase one is bounded below by zero, so a missing ratio only happens on
    // round-off level columns; stop rather than pivot on noise.
    if (leave == m) break;

    const double piv = t(leave, enter);
    for (double& v : t.row(leave)) v /= piv;
    for (std::size_t i = 0; i <= m; ++i) {
      if (i == leave) continue;
      const double f = t(i, enter);
      if (f != 0.0) {
        kernels::axpy(-f, t.row(leave), t.row(i));
        t(i, enter) = 0.0;
      }
    }
    basis[leave] = enter;
    if (++result.pivots > kMaxPivots) fail(Errc::kPrecondition, "simplex pivot limit reached");
  }

  result.x.assign(n, 0.0);
  double artificial_sum = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    const double v = std::max(0.0, t(i, rhs));
    if (basis[i] < n) {
      result.x[basis[i]] = v;
    } else {
      artificial_sum += v;
    }
  }
  result.phase_one_objective = artificial_sum;

  Vector ax = times_col(problem.a, result.x);
  for (std::size_t i = 0; i < m; ++i) {
    result.residual = std::max(result.residual, std::fabs(ax[i] - problem.b[i]));
  }
  result.feasible = artificial_sum <= tol && result.residual <= tol;
  return result;
}

}  // namespace chorder
