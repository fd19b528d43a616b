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
#include "chorder/divergences.h"
#include "chorder/error.h"
#include "chorder/random.h"
#include "doctest.h"

using namespace chorder;

namespace {

double distance_sq(const Vector& p) {
  double s = 0.0;
  for (double x : p) s += (x - 1.0 / p.size()) * (x - 1.0 / p.size());
  return s;
}

}  // namespace

TEST_CASE("KL divergence") {
  CHECK(kl(Vector{1, 0}, Vector{0.5, 0.5}).value() == doctest::Approx(std::log(2.0)));
  const Vector p{0.2, 0.3, 0.5};
  CHECK(kl(p, p).value() == 0.0);
  CHECK(kl(Vector{0.5, 0.5}, Vector{1, 0}).is_infinite());
  CHECK(kl(Vector{0.5, 0.5}, Vector{1, 0}).to_string() == "inf");
  CHECK_THROWS_AS(kl(p, Vector{0.5, 0.5}), Error);
}

TEST_CASE("chi-squared divergence") {
  CHECK(chi2(Vector{1, 0}, Vector{0.5, 0.5}).value() == doctest::Approx(1.0));
  const Vector p{0.2, 0.3, 0.5};
  CHECK(chi2(p, p).value() == 0.0);
  CHECK(chi2(Vector{0.5, 0.5}, Vector{1, 0}).is_infinite());
  const Vector w = symmetric_noise(3, 0.2).values();
  CHECK(chi2(w, Pmf::uniform(3).values()).value() == doctest::Approx(0.98).epsilon(1e-14));
}

TEST_CASE("chi-squared to uniform is q times the squared distance") {
  Rng rng(2);
  for (int rep = 0; rep < 100; ++rep) {
    const std::size_t q = 2 + rng.index(8);
    const Vector p = sample_simplex(rng, q);
    CHECK(chi2(p, Pmf::uniform(q).values()).value() ==
          doctest::Approx(q * distance_sq(p)).epsilon(1e-12));
  }
}

TEST_CASE("total variation and Dobrushin coefficient") {
  CHECK(tv_distance(Vector{1, 0}, Vector{0, 1}) == 1.0);
  CHECK(tv_distance(Vector{0.3, 0.7}, Vector{0.3, 0.7}) == 0.0);
  CHECK(tv_distance(Vector{0.8, 0.1, 0.1}, Vector{0.1, 0.8, 0.1}) == doctest::Approx(0.7));
  CHECK(eta_tv(symmetric_channel(3, 0.2)) == doctest::Approx(0.7));
  CHECK(eta_tv(Channel(Matrix::identity(4))) == 1.0);
  CHECK(eta_tv(symmetric_channel(4, 0.75)) == doctest::Approx(0.0));
  for (std::size_t q : {2, 3, 6})
    for (double d : {0.0, 0.2, 0.5, 0.9, 1.0})
      CHECK(eta_tv(symmetric_channel(q, d)) ==
            doctest::Approx(std::fabs(1.0 - d - d / (q - 1))).epsilon(1e-12));
}

TEST_CASE("maximal correlation") {
  CHECK(maximal_correlation(Pmf::uniform(3), symmetric_channel(3, 0.3)) ==
        doctest::Approx(0.55).epsilon(1e-12));
  CHECK(maximal_correlation(Pmf::uniform(4), Channel(Matrix::identity(4))) ==
        doctest::Approx(1.0).epsilon(1e-12));
  for (std::size_t q : {2, 3, 5, 10})
    for (int k = 0; k <= 10; ++k) {
      const double d = 0.1 * k;
      CHECK(std::fabs(maximal_correlation(Pmf::uniform(q), symmetric_channel(q, d)) -
                      std::fabs(1.0 - d - d / (q - 1))) <= 1e-10);
    }
  CHECK_THROWS_AS(maximal_correlation(Pmf::delta(3, 0), symmetric_channel(3, 0.2)), Error);

  // Binary oracle: for a 2x2 channel the maximal correlation under input p
  // is |det W| sqrt(p0 p1 / (r0 r1)) with r = pW.
  Rng rng(8);
  for (int rep = 0; rep < 20; ++rep) {
    const Matrix m = sample_stochastic_matrix(rng, 2, 2);
    const Pmf p(sample_interior_pmf(rng, 2));
    const Vector r = row_times(p.values(), m);
    const double det = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    const double expect = std::fabs(det) * std::sqrt(p[0] * p[1] / (r[0] * r[1]));
    CHECK(maximal_correlation(p, Channel(m)) == doctest::Approx(expect).epsilon(1e-9));
  }
}

TEST_CASE("KL contraction bounds") {
  const EtaKlBounds b = eta_kl_bounds(symmetric_channel(3, 0.2), 50, 1);
  CHECK(b.lower >= 0.49 - 1e-12);
  CHECK(b.upper == doctest::Approx(0.7));
  CHECK(b.lower <= b.upper + 1e-12);
  const EtaKlBounds id = eta_kl_bounds(Channel(Matrix::identity(3)), 20, 1);
  CHECK(id.lower == doctest::Approx(1.0));
  CHECK(id.upper == 1.0);
  const EtaKlBounds flat = eta_kl_bounds(symmetric_channel(3, 2.0 / 3.0), 20, 1);
  CHECK(flat.lower <= 1e-20);
  CHECK(flat.upper <= 1e-15);

  Rng rng(4);
  for (int rep = 0; rep < 20; ++rep) {
    const Channel w(sample_stochastic_matrix(rng, 3, 4));
    const EtaKlBounds r = eta_kl_bounds(w, 30, rep);
    CHECK(r.lower <= r.upper + 1e-12);
  }
}

TEST_CASE("data processing inequality") {
  Rng rng(12);
  for (int rep = 0; rep < 1000; ++rep) {
    const std::size_t q = 2 + rng.index(5), r = 2 + rng.index(5);
    const Matrix w = sample_stochastic_matrix(rng, q, r);
    const Vector p = sample_simplex(rng, q), s = sample_interior_pmf(rng, q);
    const Vector pw = row_times(p, w), sw = row_times(s, w);
    CHECK(kl(pw, sw).value() <= kl(p, s).value() + 1e-12);
    CHECK(chi2(pw, sw).value() <= chi2(p, s).value() + 1e-12);
  }
}

TEST_CASE("local chi-squared approximation of KL") {
  const Pmf p(Vector{1, 0}), q(Vector{0.5, 0.5});
  const Vector lambdas{1e-1, 1e-2, 1e-3, 1e-4};
  const LocalApproxReport r = kl_chi2_local_check(p, q, lambdas);
  CHECK(r.chi2 == doctest::Approx(1.0));
  CHECK(std::fabs(r.values.back() - 1.0) <= 1e-3);
  for (std::size_t i = 1; i < r.values.size(); ++i)
    CHECK(std::fabs(r.values[i] - r.chi2) <= std::fabs(r.values[i - 1] - r.chi2));
  const LocalApproxReport same = kl_chi2_local_check(q, q, lambdas);
  for (double v : same.values) CHECK(v == 0.0);
}

TEST_CASE("integral representation of KL") {
  const Pmf u = Pmf::uniform(2);
  CHECK(kl_chi2_integral_check(u, u).integral == 0.0);
  const IntegralReport a = kl_chi2_integral_check(Pmf(Vector{1, 0}), u);
  CHECK(a.integral == doctest::Approx(std::log(2.0)).epsilon(1e-4));
  const IntegralReport b = kl_chi2_integral_check(Pmf(Vector{0.9, 0.1}), Pmf(Vector{0.2, 0.8}));
  CHECK(b.relative_error <= 1e-4);
  CHECK(b.nodes >= 10000);
  CHECK_THROWS_AS(kl_chi2_integral_check(u, Pmf(Vector{1, 0})), Error);
}
