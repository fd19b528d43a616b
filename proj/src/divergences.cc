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

#include "chorder/divergences.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "chorder/error.h"
#include "chorder/linalg.h"
#include "chorder/random.h"

namespace chorder {

double DivergenceValue::as_double() const {
  return infinite_ ? std::numeric_limits<double>::infinity() : value_;
}

std::string DivergenceValue::to_string() const {
  return infinite_ ? "inf" : std::to_string(value_);
}

bool DivergenceValue::at_least(const DivergenceValue& other, double tol) const {
  if (infinite_) return true;
  if (other.infinite_) return false;
  return value_ >= other.value_ - tol;
}

namespace {

void same_length(std::span<const double> p, std::span<const double> q) {
  if (p.size() != q.size()) fail(Errc::kDimensionMismatch, "pmf lengths differ");
}

}  // namespace

DivergenceValue kl(std::span<const double> p, std::span<const double> q) {
  same_length(p, q);
  double d = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] <= 0.0) continue;
    if (q[i] <= 0.0) return DivergenceValue::infinity();
    d += p[i] * std::log(p[i] / q[i]);
  }
  return DivergenceValue::finite(std::max(0.0, d));
}

DivergenceValue chi2(std::span<const double> p, std::span<const double> q) {
  same_length(p, q);
  // Sum of (p - q)^2 / q rather than p^2 / q - 1, to avoid cancellation.
  double d = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (q[i] <= 0.0) {
      if (p[i] > 0.0) return DivergenceValue::infinity();
      continue;
    }
    const double diff = p[i] - q[i];
    d += diff * diff / q[i];
  }
  return DivergenceValue::finite(d);
}

double tv_distance(std::span<const double> p, std::span<const double> q) {
  same_length(p, q);
  double s = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) s += std::fabs(p[i] - q[i]);
  return 0.5 * s;
}

double entropy(std::span<const double> p) {
  double h = 0.0;
  for (double v : p)
    if (v > 0.0) h -= v * std::log(v);
  return h;
}

double eta_tv(const Channel& w) {
  const Matrix& m = w.matrix();
  double best = 0.0;
  for (std::size_t a = 0; a < m.rows(); ++a)
    for (std::size_t b = a + 1; b < m.rows(); ++b)
      best = std::max(best, tv_distance(m.row(a), m.row(b)));
  return best;
}

double maximal_correlation(const Pmf& p, const Channel& w) {
  if (p.size() != w.inputs()) fail(Errc::kDimensionMismatch, "pmf length vs channel inputs");
  if (!p.interior()) fail(Errc::kPrecondition, "input pmf must be strictly positive");
  const Vector out = row_times(p.values(), w.matrix());
  for (double v : out)
    if (!(v > 0.0)) fail(Errc::kPrecondition, "output pmf must be strictly positive");
  Matrix b = w.matrix();
  for (std::size_t i = 0; i < b.rows(); ++i) {
    const double ri = std::sqrt(p[i]);
    for (std::size_t j = 0; j < b.cols(); ++j) b(i, j) *= ri / std::sqrt(out[j]);
  }
  const Vector sv = singular_values(b);
  if (sv.size() < 2) return 0.0;
  // Singular values carry absolute error near machine epsilon; anything
  // below that floor is a zero correlation.
  if (sv[1] < 1e-12) return 0.0;
  return std::clamp(sv[1], 0.0, 1.0);
}

EtaKlBounds eta_kl_bounds(const Channel& w, std::size_t samples, std::uint64_t seed) {
  EtaKlBounds out;
  out.upper = eta_tv(w);
  const std::size_t q = w.inputs();
  Rng rng(seed);
  double best = 0.0;
  for (std::size_t k = 0; k <= samples; ++k) {
    const Pmf p = k == 0 ? Pmf::uniform(q) : Pmf(sample_interior_pmf(rng, q));
    const double rho = maximal_correlation(p, w);
    best = std::max(best, rho * rho);
  }
  out.lower = best;
  out.samples = samples + 1;
  return out;
}

LocalApproxReport kl_chi2_local_check(const Pmf& p, const Pmf& q,
                                      std::span<const double> lambdas) {
  if (p.size() != q.size()) fail(Errc::kDimensionMismatch, "pmf lengths differ");
  if (!q.interior()) fail(Errc::kPrecondition, "reference pmf must be strictly positive");
  LocalApproxReport r;
  r.chi2 = chi2(p, q).value();
  r.lambdas.assign(lambdas.begin(), lambdas.end());
  Vector mix(p.size());
  for (double lambda : lambdas) {
    if (!(lambda > 0.0 && lambda <= 1.0)) fail(Errc::kParameter, "lambda must lie in (0, 1]");
    for (std::size_t i = 0; i < p.size(); ++i) mix[i] = lambda * p[i] + (1.0 - lambda) * q[i];
    // Direct KL loses everything to cancellation for tiny lambda; expand
    // log(1 + x) with log1p where x = lambda (p_i - q_i) / q_i.
    double d = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (mix[i] <= 0.0) continue;
      d += mix[i] * std::log1p(lambda * (p[i] - q[i]) / q[i]);
    }
    r.values.push_back(2.0 / (lambda * lambda) * d);
  }
  r.final_gap = r.values.empty() ? 0.0 : std::fabs(r.values.back() - r.chi2);
  return r;
}

IntegralReport kl_chi2_integral_check(const Pmf& p, const Pmf& q, std::size_t nodes) {
  if (p.size() != q.size()) fail(Errc::kDimensionMismatch, "pmf lengths differ");
  if (!q.interior()) fail(Errc::kPrecondition, "reference pmf must be strictly positive");
  if (nodes < 2) nodes = 2;
  if (nodes % 2) ++nodes;

  // With m_s = s p + (1 - s) q, the integrand is
  //   chi^2(p || m_s) / (1 - s) = (1 - s) sum_i (p_i - q_i)^2 / m_s,i,
  // and atoms with p_i = 0 contribute exactly q_i for every s.
  auto integrand = [&](double s) {
    double f = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (p[i] == 0.0) {
        f += q[i];
        continue;
      }
      const double diff = p[i] - q[i];
      f += (1.0 - s) * diff * diff / (s * p[i] + (1.0 - s) * q[i]);
    }
    return f;
  };

  const double h = 1.0 / static_cast<double>(nodes);
  double acc = integrand(0.0) + integrand(1.0);
  for (std::size_t k = 1; k < nodes; ++k) {
    acc += (k % 2 ? 4.0 : 2.0) * integrand(static_cast<double>(k) * h);
  }
  IntegralReport r;
  r.integral = acc * h / 3.0;
  r.kl = kl(p, q).value();
  r.relative_error = r.kl > 0.0 ? std::fabs(r.integral - r.kl) / r.kl : std::fabs(r.integral);
  r.nodes = nodes;
  return r;
}

}  // namespace chorder
