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

#include "chorder/channels.h"
#include "chorder/error.h"
#include "chorder/groups.h"
#include "chorder/linalg.h"
#include "chorder/random.h"
#include "doctest.h"

using namespace chorder;

TEST_CASE("pmf validation") {
  CHECK(Pmf(Vector{0.25, 0.75}).values() == Vector{0.25, 0.75});
  CHECK_THROWS_AS(Pmf(Vector{0.5, -0.1, 0.6}), Error);
  CHECK_THROWS_AS(Pmf(Vector{0.5, 0.6}), Error);
  CHECK_THROWS_AS(Pmf(Vector{NAN, 1.0}), Error);
  CHECK_THROWS_AS(Pmf(Vector{}), Error);
  // Small round-off from text input is renormalised.
  const Pmf p(Vector{0.3333333333, 0.3333333333, 0.3333333333});
  double s = 0.0;
  for (double x : p.values()) s += x;
  CHECK(std::fabs(s - 1.0) <= 1e-12);
  CHECK(Pmf::uniform(4).interior());
  CHECK_FALSE(Pmf::delta(4, 2).interior());
  CHECK(Pmf::delta(4, 2)[2] == 1.0);
}

TEST_CASE("channel validation") {
  CHECK_THROWS_AS(Channel(Matrix{{0.5, 0.5}, {0.2, 0.7}}), Error);
  CHECK_THROWS_AS(Channel(Matrix{{1.0, 0.0}, {1.0, 0.0}}), Error);  // zero column
  const Channel w(Matrix{{0.9, 0.1}, {0.2, 0.8}});
  CHECK_FALSE(w.doubly_stochastic());
  CHECK(symmetric_channel(4, 0.3).doubly_stochastic());
  CHECK(Channel(Matrix::identity(3)).is_identity());
}

TEST_CASE("symmetric channels") {
  CHECK(symmetric_channel(2, 0.11).matrix() == Matrix{{0.89, 0.11}, {0.11, 0.89}});
  const Matrix w = symmetric_channel(3, 0.2).matrix();
  CHECK(max_abs_diff(w, Matrix{{0.8, 0.1, 0.1}, {0.1, 0.8, 0.1}, {0.1, 0.1, 0.8}}) <= 1e-16);
  const Matrix flat = symmetric_channel(3, 2.0 / 3.0).matrix();
  for (double x : flat.data()) CHECK(x == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK_THROWS_AS(symmetric_channel(3, 1.2), Error);
  CHECK_THROWS_AS(symmetric_channel(3, -0.1), Error);
  CHECK_THROWS_AS(symmetric_channel(1, 0.1), Error);
  // The raw family admits any real parameter.
  CHECK(symmetric_matrix(3, -0.5)(0, 0) == 1.5);

  const auto klein = direct_product(cyclic_group(2), cyclic_group(2));
  for (const auto& g : {cyclic_group(4), klein})
    CHECK(max_abs_diff(additive_channel(g, symmetric_noise(4, 0.3)).matrix(),
                       symmetric_channel(4, 0.3).matrix()) <= 1e-16);
}

TEST_CASE("symmetric channel algebra") {
  CHECK(symmetric_eigenvalue(3, 0.2) == doctest::Approx(0.7).epsilon(1e-15));
  CHECK(symmetric_eigenvalue(5, 0.0) == 1.0);
  CHECK(std::fabs(symmetric_eigenvalue(3, 2.0 / 3.0)) <= 1e-15);

  CHECK(symmetric_inverse_param(3, 0.2) == doctest::Approx(-2.0 / 7.0).epsilon(1e-14));
  CHECK(symmetric_inverse_param(6, 0.0) == 0.0);
  CHECK(symmetric_inverse_param(2, 0.11) == doctest::Approx(-0.11 / 0.78).epsilon(1e-14));
  CHECK_THROWS_AS(symmetric_inverse_param(3, 2.0 / 3.0), Error);
  for (std::size_t q : {2, 3, 5})
    for (double d : {0.1, 0.3, 0.9}) {
      const Matrix prod = symmetric_matrix(q, symmetric_inverse_param(q, d)) * symmetric_matrix(q, d);
      CHECK(max_abs_diff(prod, Matrix::identity(q)) <= 1e-12);
    }

  CHECK(symmetric_compose_param(3, 0.2, 0.2) == doctest::Approx(0.34).epsilon(1e-14));
  const Matrix sq = symmetric_matrix(3, 0.2) * symmetric_matrix(3, 0.2);
  CHECK(1.0 - sq(0, 0) == doctest::Approx(0.34).epsilon(1e-14));
  CHECK(symmetric_compose_param(4, 0.0, 0.37) == doctest::Approx(0.37));
  CHECK(symmetric_compose_param(4, 0.2, 0.75) == doctest::Approx(0.75).epsilon(1e-15));
}

TEST_CASE("symmetric products compose and commute") {
  for (std::size_t q : {2, 3, 4, 7})
    for (double e : {0.05, 0.4, 0.8})
      for (double d : {0.1, 0.5, 1.0}) {
        const Matrix a = symmetric_matrix(q, e), b = symmetric_matrix(q, d);
        CHECK(max_abs_diff(a * b, symmetric_matrix(q, symmetric_compose_param(q, e, d))) <= 1e-14);
        CHECK(max_abs_diff(a * b, b * a) <= 1e-15);
      }
}

TEST_CASE("symmetric spectrum agrees with the closed form") {
  for (std::size_t q : {2, 3, 5, 10})
    for (int k = 0; k <= 20; ++k) {
      const double d = 0.05 * k;
      const auto e = jacobi_eigen(symmetric_matrix(q, d));
      const double lam = symmetric_eigenvalue(q, d);
      std::size_t ones = 0, lams = 0;
      for (double v : e.values) {
        if (std::fabs(v - 1.0) <= 1e-10) ++ones;
        if (std::fabs(v - lam) <= 1e-10) ++lams;
      }
      CHECK(lams >= q - 1);
      CHECK(ones >= 1);
    }
}

TEST_CASE("erasure channels") {
  CHECK(erasure_channel(2, 0.3).matrix() == Matrix{{0.7, 0.0, 0.3}, {0.0, 0.7, 0.3}});
  CHECK(erasure_channel(3, 0.0).matrix() == Matrix::identity(3));
  const Channel all = erasure_channel(3, 1.0);
  CHECK(all.outputs() == 1);
  CHECK(all.matrix() == Matrix{{1.0}, {1.0}, {1.0}});
  CHECK_THROWS_AS(erasure_channel(3, 1.5), Error);
}

TEST_CASE("additive channels and push-forward") {
  const auto z3 = cyclic_group(3);
  CHECK(additive_channel(z3, Pmf(Vector{0.5, 0.3, 0.2})).matrix() ==
        Matrix{{0.5, 0.3, 0.2}, {0.2, 0.5, 0.3}, {0.3, 0.2, 0.5}});
  CHECK(additive_channel(z3, Pmf::delta(3, 0)).is_identity());
  CHECK_THROWS_AS(additive_channel(z3, Pmf::uniform(4)), Error);

  Rng rng(1);
  const Channel v = additive_channel(cyclic_group(5), Pmf(sample_simplex(rng, 5)));
  CHECK(max_abs_diff(push_forward(Pmf::uniform(5), v).values(), Pmf::uniform(5).values()) <=
        1e-15);
  const Channel w(sample_stochastic_matrix(rng, 4, 3));
  CHECK(push_forward(Pmf::delta(4, 2), w).values() == w.matrix().row_vector(2));
  const Pmf half = push_forward(Pmf::uniform(2), symmetric_channel(2, 0.11));
  CHECK(half[0] == doctest::Approx(0.5));
  CHECK_THROWS_AS(push_forward(Pmf::uniform(3), w), Error);
}

TEST_CASE("noise pmf of W_delta is group-independent only for symmetric noise") {
  const auto z4 = cyclic_group(4);
  const auto klein = direct_product(cyclic_group(2), cyclic_group(2));
  const Pmf sym = symmetric_noise(4, 0.6);
  CHECK(additive_channel(z4, sym).matrix() == additive_channel(klein, sym).matrix());
  const Pmf skew(Vector{0.4, 0.3, 0.2, 0.1});
  CHECK(additive_channel(z4, skew).matrix() != additive_channel(klein, skew).matrix());
}
