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
#include <random>
#include <vector>

#include "chorder/channels.h"
#include "chorder/kernels.h"
#include "chorder/linalg.h"
#include "doctest.h"

namespace k = chorder::kernels;

namespace {

std::vector<double> random_vector(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> d(-2.0, 2.0);
  std::vector<double> v(n);
  for (double& x : v) x = d(rng);
  return v;
}

std::vector<k::Isa> simd_isas() {
  std::vector<k::Isa> out;
  for (k::Isa isa : {k::Isa::kAvx2, k::Isa::kNeon})
    if (k::table_for(isa) != nullptr) out.push_back(isa);
  return out;
}

// Restores the detected ISA when a test switches kernels.
struct IsaGuard {
  k::Isa saved = k::active_isa();
  ~IsaGuard() { k::set_isa(saved); }
};

}  // namespace

TEST_CASE("scalar table is always available") {
  REQUIRE(k::table_for(k::Isa::kScalar) != nullptr);
  CHECK(k::set_isa(k::Isa::kScalar));
  CHECK(k::active_isa() == k::Isa::kScalar);
  CHECK(k::set_isa(k::detected_isa()));
}

TEST_CASE("SIMD kernels match the scalar reference, including tails") {
  std::mt19937_64 rng(7);
  const k::KernelTable& ref = k::scalar_table();
  for (k::Isa isa : simd_isas()) {
    CAPTURE(k::isa_name(isa));
    const k::KernelTable& t = *k::table_for(isa);
    for (std::size_t n : {0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 15, 16, 17, 31, 33, 64, 1001}) {
      CAPTURE(n);
      const auto x = random_vector(rng, n), y = random_vector(rng, n);
      double scale = 1.0;
      for (std::size_t i = 0; i < n; ++i) scale += std::fabs(x[i] * y[i]);

      CHECK(std::fabs(t.dot(x.data(), y.data(), n) - ref.dot(x.data(), y.data(), n)) <=
            1e-13 * scale);
      CHECK(std::fabs(t.sum(x.data(), n) - ref.sum(x.data(), n)) <= 1e-13 * (1.0 + 2.0 * n));
      CHECK(t.max_abs(x.data(), n) == ref.max_abs(x.data(), n));

      auto ya = y, yb = y;
      t.axpy(0.37, x.data(), ya.data(), n);
      ref.axpy(0.37, x.data(), yb.data(), n);
      for (std::size_t i = 0; i < n; ++i) CHECK(ya[i] == doctest::Approx(yb[i]).epsilon(1e-15));

      auto xa = x, xb = x;
      ya = y;
      yb = y;
      const double c = std::cos(0.3), s = std::sin(0.3);
      t.rotate(xa.data(), ya.data(), n, c, s);
      ref.rotate(xb.data(), yb.data(), n, c, s);
      for (std::size_t i = 0; i < n; ++i) {
        CHECK(std::fabs(xa[i] - xb[i]) <= 1e-15 * 4.0);
        CHECK(std::fabs(ya[i] - yb[i]) <= 1e-15 * 4.0);
      }
    }
  }
}

TEST_CASE("max_abs finds the extreme entry wherever it sits") {
  for (k::Isa isa : {k::Isa::kScalar, k::Isa::kAvx2, k::Isa::kNeon}) {
    const k::KernelTable* t = k::table_for(isa);
    if (t == nullptr) continue;
    for (std::size_t n = 1; n < 20; ++n)
      for (std::size_t pos = 0; pos < n; ++pos) {
        std::vector<double> v(n, 0.5);
        v[pos] = -3.0;
        CHECK(t->max_abs(v.data(), n) == 3.0);
      }
  }
}

TEST_CASE("eigen-solver results do not depend on the active ISA") {
  IsaGuard guard;
  const chorder::Matrix w = chorder::symmetric_matrix(7, 0.35);
  const chorder::Matrix a = w * w.transpose();
  REQUIRE(k::set_isa(k::Isa::kScalar));
  const auto ref = chorder::jacobi_eigen(a);
  for (k::Isa isa : simd_isas()) {
    REQUIRE(k::set_isa(isa));
    const auto got = chorder::jacobi_eigen(a);
    for (std::size_t i = 0; i < ref.values.size(); ++i)
      CHECK(std::fabs(got.values[i] - ref.values[i]) <= 1e-12);
  }
}
