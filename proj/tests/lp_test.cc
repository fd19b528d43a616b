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

#include <cmath>

#include "chorder/lp.h"
#include "chorder/random.h"
#include "doctest.h"

using namespace chorder;

TEST_CASE("phase-one LP on small systems") {
  SUBCASE("feasible") {
    const LpProblem p{Matrix{{1, 1, 0}, {0, 1, 1}}, Vector{1.0, 1.5}};
    const LpResult r = solve_phase_one(p);
    REQUIRE(r.feasible);
    CHECK(r.residual <= kLpTol);
    for (double x : r.x) CHECK(x >= 0.0);
    CHECK(r.x[0] + r.x[1] == doctest::Approx(1.0));
    CHECK(r.x[1] + r.x[2] == doctest::Approx(1.5));
  }
  SUBCASE("inconsistent equalities") {
    const LpProblem p{Matrix{{1, 1}, {1, 1}}, Vector{1.0, 2.0}};
    const LpResult r = solve_phase_one(p);
    CHECK_FALSE(r.feasible);
    CHECK(r.phase_one_objective > kLpTol);
  }
  SUBCASE("nonnegativity binds") {
    const LpProblem p{Matrix{{1, -1}}, Vector{-1.0}};
    const LpResult r = solve_phase_one(p);
    REQUIRE(r.feasible);
    CHECK(r.x[1] - r.x[0] == doctest::Approx(1.0));
    const LpProblem q{Matrix{{1, 1}}, Vector{-1.0}};
    CHECK_FALSE(solve_phase_one(q).feasible);
  }
  SUBCASE("redundant rows") {
    const LpProblem p{Matrix{{1, 2}, {2, 4}, {1, 2}}, Vector{2.0, 4.0, 2.0}};
    CHECK(solve_phase_one(p).feasible);
  }
}

TEST_CASE("random feasible systems are recognised") {
  Rng rng(99);
  for (int rep = 0; rep < 50; ++rep) {
    const std::size_t m = 2 + rng.index(5), n = m + rng.index(6);
    Matrix a(m, n);
    for (double& x : a.data()) x = rng.normal();
    Vector x0(n);
    for (double& x : x0) x = rng.uniform() < 0.3 ? 0.0 : rng.uniform();
    const LpResult r = solve_phase_one({a, times_col(a, x0)});
    CHECK(r.feasible);
    CHECK(r.residual <= 1e-9);
  }
}
