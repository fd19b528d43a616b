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

#include "chorder/dirichlet.h"

#include <algorithm>
#include <cmath>

#include "chorder/divergences.h"
#include "chorder/error.h"
#include "chorder/preorders.h"
#include "chorder/random.h"

namespace chorder {

namespace {

constexpr double kStochasticTol = 1e-9;

void require_doubly_stochastic(const Channel& v) {
  if (!v.square() || !v.doubly_stochastic(kStochasticTol))
    fail(Errc::kPrecondition, "channel must be doubly stochastic");
}

void require_length(const Channel& v, const FunctionOnX& f) {
  if (f.size() != v.inputs()) fail(Errc::kDimensionMismatch, "function length differs from q");
}

void check_lsi_args(std::size_t q, double delta) {
  if (q < 2) fail(Errc::kParameter, "alphabet size must be at least 2");
  if (!(delta > 0.0 && delta <= 1.0)) fail(Errc::kParameter, "delta must lie in (0, 1]");
}

Matrix sym_part(const Matrix& m) { return 0.5 * (m + m.transpose()); }

}  // namespace

FunctionOnX::FunctionOnX(Vector values) : values_(std::move(values)) {
  for (double x : values_)
    if (!std::isfinite(x)) fail(Errc::kParameter, "function values must be finite");
}

FunctionOnX FunctionOnX::normalized(Vector values) {
  FunctionOnX f(std::move(values));
  const double n = std::sqrt(f.norm_squared());
  if (!(n > 0.0)) fail(Errc::kParameter, "cannot normalise the zero function");
  for (double& x : f.values_) x /= n;
  return f;
}

double FunctionOnX::norm_squared() const {
  double s = 0.0;
  for (double x : values_) s += x * x;
  return s / static_cast<double>(values_.size());
}

double dirichlet_form(const Channel& v, const FunctionOnX& f) {
  require_doubly_stochastic(v);
  require_length(v, f);
  const Vector vf = times_col(v.matrix(), f.values());
  double s = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) s += f[i] * (f[i] - vf[i]);
  return s / static_cast<double>(f.size());
}

double standard_dirichlet(const FunctionOnX& f) {
  const double q = static_cast<double>(f.size());
  double s = 0.0, s2 = 0.0;
  for (double x : f.values()) {
    s += x;
    s2 += x * x;
  }
  return std::max(0.0, s2 / q - (s / q) * (s / q));
}

double lsi_constant_symmetric(std::size_t q, double delta) {
  check_lsi_args(q, delta);
  if (q == 2) return delta;
  const double qm1 = static_cast<double>(q - 1);
  return static_cast<double>(q - 2) * delta / (qm1 * std::log(qm1));
}

double discrete_lsi_constant_symmetric(std::size_t q, double delta) {
  check_lsi_args(q, delta);
  const double prime = delta * (2.0 - static_cast<double>(q) * delta / static_cast<double>(q - 1));
  return lsi_constant_symmetric(q, prime);
}

double lsi_functional(const FunctionOnX& f) {
  if (std::fabs(f.norm_squared() - 1.0) > 1e-9)
    fail(Errc::kPrecondition, "lsi_functional: f must have unit norm");
  double s = 0.0;
  for (double x : f.values()) {
    const double x2 = x * x;
    if (x2 > 0.0) s += x2 * std::log(x2);
  }
  return std::max(0.0, s / static_cast<double>(f.size()));
}

double estimate_lsi_constant(const Channel& v, std::size_t samples, std::uint64_t seed) {
  require_doubly_stochastic(v);
  const std::size_t q = v.inputs();
  Rng rng(seed);
  double best = INFINITY;
  auto consider = [&](Vector raw) {
    const FunctionOnX f = FunctionOnX::normalized(std::move(raw));
    const double d = lsi_functional(f);
    if (d < 1e-12) return;
    best = std::min(best, dirichlet_form(v, f) / d);
  };
  for (std::size_t i = 0; i < samples; ++i) {
    Vector raw(q);
    if (i % 2 == 0) {
      for (double& x : raw) x = rng.normal();
    } else {
      // Near-indicator spike: f^2 proportional to a pmf close to a vertex.
      const Vector p = sample_near_vertex_pmf(rng, q);
      for (std::size_t k = 0; k < q; ++k) raw[k] = std::sqrt(p[k]);
    }
    consider(std::move(raw));
  }
  // A deterministic family of spikes mixing a vertex with the uniform pmf.
  for (std::size_t k = 0; k < q; ++k)
    for (double t = 1e-3; t < 1.0; t *= 1.5) {
      Vector raw(q, t);
      raw[k] = 1.0;
      consider(std::move(raw));
    }
  return std::isfinite(best) ? best : 0.0;
}

std::string_view dirichlet_kind_name(DirichletKind k) {
  switch (k) {
    case DirichletKind::kDiscrete: return "discrete";
    case DirichletKind::kContinuous: return "continuous";
    case DirichletKind::kStandard: return "standard";
  }
  return "discrete";
}

DirichletKind parse_dirichlet_kind(std::string_view s) {
  if (s == "discrete") return DirichletKind::kDiscrete;
  if (s == "continuous") return DirichletKind::kContinuous;
  if (s == "standard") return DirichletKind::kStandard;
  fail(Errc::kParameter, "kind must be discrete, continuous or standard");
}

bool dirichlet_domination_check(const Channel& w, const Channel& v, DirichletKind kind,
                                std::optional<double> delta, double tol) {
  require_doubly_stochastic(w);
  require_doubly_stochastic(v);
  if (w.inputs() != v.inputs()) fail(Errc::kDimensionMismatch, "channel sizes differ");
  const Matrix& wm = w.matrix();
  const Matrix& vm = v.matrix();
  switch (kind) {
    case DirichletKind::kDiscrete:
      return psd_check(symmetrize(wm * wm.transpose() - vm * vm.transpose()), tol).psd;
    case DirichletKind::kContinuous: {
      if (!is_symmetric(wm, 1e-10) || !psd_check(symmetrize(wm), tol).psd)
        fail(Errc::kPrecondition, "continuous check needs a positive semidefinite W");
      if (max_abs_diff(vm * vm.transpose(), vm.transpose() * vm) > 1e-10)
        fail(Errc::kPrecondition, "continuous check needs a normal V");
      return psd_check(sym_part(wm) - sym_part(vm), tol).psd;
    }
    case DirichletKind::kStandard: {
      const std::size_t q = w.inputs();
      const double d = delta.value_or(1.0 - wm(0, 0));
      const double top = static_cast<double>(q - 1) / static_cast<double>(q);
      if (!(d >= -1e-12 && d <= top + 1e-12))
        fail(Errc::kPrecondition, "standard check needs delta in [0, (q-1)/q]");
      const Matrix sym = symmetric_matrix(q, std::clamp(d, 0.0, top));
      if (max_abs_diff(sym, wm) > 1e-9)
        fail(Errc::kPrecondition, "standard check needs W to be the symmetric channel W_delta");
      return psd_check(sym - sym_part(vm), tol).psd;
    }
  }
  return false;
}

KlDecayReport kl_decay_check(const Channel& v, double alpha, const Pmf& mu0,
                             std::size_t horizon) {
  require_doubly_stochastic(v);
  if (!(alpha >= 0.0 && alpha <= 1.0)) fail(Errc::kParameter, "alpha must lie in [0, 1]");
  if (mu0.size() != v.inputs()) fail(Errc::kDimensionMismatch, "initial pmf length differs");
  KlDecayReport r;
  r.alpha = alpha;
  const Vector u = Pmf::uniform(v.inputs()).values();
  const double d0 = kl(mu0, u).as_double();
  Vector mu = mu0.values();
  for (std::size_t n = 1; n <= horizon; ++n) {
    mu = row_times(mu, v.matrix());
    KlDecayStep s;
    s.n = n;
    s.lhs = kl(mu, u).as_double();
    s.bound = std::pow(1.0 - alpha, static_cast<double>(n)) * d0;
    if (s.lhs > s.bound + 1e-12 * std::max(1.0, d0)) r.holds = false;
    r.steps.push_back(s);
  }
  return r;
}

}  // namespace chorder
