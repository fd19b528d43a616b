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

#include "chorder/preorders.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>

#include "chorder/error.h"
#include "chorder/linalg.h"
#include "chorder/lp.h"
#include "chorder/random.h"

namespace chorder {

std::string_view status_name(Status s) {
  switch (s) {
    case Status::kDominates: return "Dominates";
    case Status::kFails: return "Fails";
    case Status::kUndetermined: return "Undetermined";
  }
  return "Undetermined";
}

namespace {

DominationVerdict dominates(Certificate c) {
  DominationVerdict v;
  v.status = Status::kDominates;
  v.certificate = std::move(c);
  return v;
}

DominationVerdict fails(Witness w) {
  DominationVerdict v;
  v.status = Status::kFails;
  v.witness = std::move(w);
  return v;
}

DominationVerdict lp_infeasible(const LpResult& r) {
  Witness w;
  w.kind = WitnessKind::kLpInfeasible;
  w.phase_one_objective = r.phase_one_objective;
  return fails(std::move(w));
}

void check_same_inputs(const Channel& w, const Channel& v) {
  if (w.inputs() != v.inputs())
    fail(Errc::kDimensionMismatch, "channels have different input alphabets");
}

// Special cases shared by the degradation and less-noisy front ends.
std::optional<DominationVerdict> special_case(const Channel& w, const Channel& v) {
  if (w.is_identity()) {
    Certificate c;
    c.kind = CertificateKind::kSpecialCase;
    c.kernel = v.matrix();
    return dominates(std::move(c));
  }
  if (v.rows_equal()) {
    Certificate c;
    c.kind = CertificateKind::kSpecialCase;
    c.kernel = Matrix(w.outputs(), v.outputs());
    for (std::size_t k = 0; k < w.outputs(); ++k)
      std::copy(v.matrix().row(0).begin(), v.matrix().row(0).end(), c.kernel.row(k).begin());
    c.residual = max_abs_diff(w.matrix() * c.kernel, v.matrix());
    return dominates(std::move(c));
  }
  if (w.rows_equal()) {
    // W A has equal rows for every A, so V cannot be reached.
    std::size_t b = 1;
    while (b < v.inputs() && max_abs_diff(v.matrix().row(b), v.matrix().row(0)) <= kPmfTol) ++b;
    Witness wit;
    wit.kind = WitnessKind::kRowsDiffer;
    wit.p = Pmf::delta(v.inputs(), 0).values();
    wit.q = Pmf::delta(v.inputs(), b).values();
    wit.w_divergence = kl(w.matrix().row(0), w.matrix().row(b));
    wit.v_divergence = kl(v.matrix().row(0), v.matrix().row(b));
    return fails(std::move(wit));
  }
  return std::nullopt;
}

// W^{-T} diag(row) W^{-1}.
Matrix inverse_form(const Matrix& inv, std::span<const double> row) {
  Matrix scaled = inv;
  for (std::size_t k = 0; k < scaled.rows(); ++k)
    for (double& e : scaled.row(k)) e *= row[k];
  return symmetrize(inv.transpose() * scaled);
}

double divergence_slack(const DivergenceValue& v, double tol) {
  return tol * std::max(1.0, v.is_infinite() ? 1.0 : std::fabs(v.value()));
}

// Checks D(PW||QW) >= D(PV||QV) for KL and chi^2; returns the violation.
std::optional<Witness> pair_violation(const Channel& w, const Channel& v,
                                      const Vector& p, const Vector& q, double tol) {
  const Vector pw = row_times(p, w.matrix()), qw = row_times(q, w.matrix());
  const Vector pv = row_times(p, v.matrix()), qv = row_times(q, v.matrix());
  using Div = DivergenceValue (*)(std::span<const double>, std::span<const double>);
  constexpr std::array<std::pair<Div, WitnessKind>, 2> kTests = {
      std::pair<Div, WitnessKind>{&kl, WitnessKind::kKlPair},
      std::pair<Div, WitnessKind>{&chi2, WitnessKind::kChi2Pair}};
  for (const auto& [div, kind] : kTests) {
    const DivergenceValue dw = div(pw, qw), dv = div(pv, qv);
    if (!dw.at_least(dv, divergence_slack(dv, tol))) {
      Witness wit;
      wit.kind = kind;
      wit.p = p;
      wit.q = q;
      wit.w_divergence = dw;
      wit.v_divergence = dv;
      return wit;
    }
  }
  return std::nullopt;
}

struct SampleOutcome {
  std::optional<Witness> witness;
  double radius_deviation = 0.0;
};

// Range inclusion and Loewner order of the Hessian forms at interior p.
SampleOutcome hessian_probe(const Channel& w, const Channel& v, const Vector& p,
                            const PreorderOptions& opts) {
  SampleOutcome out;
  const Matrix a = hessian_form(w, p);
  const Matrix b = hessian_form(v, p);
  const double scale = std::max({1.0, max_abs(a), max_abs(b)});

  const Matrix proj = range_projector(a, 1e-10);
  const Matrix leak = b - proj * b;
  if (max_abs(leak) > 1e-7 * scale) {
    Witness wit;
    wit.kind = WitnessKind::kRange;
    wit.p = p;
    wit.eigenvalue = max_abs(leak);
    out.witness = std::move(wit);
    return out;
  }
  const PsdCheck gap = psd_check(a - b, opts.psd_tol * scale);
  if (!gap.psd) {
    Witness wit;
    wit.kind = WitnessKind::kLoewner;
    wit.p = p;
    wit.eigenvalue = gap.min_eigenvalue;
    wit.direction = gap.eigenvector;
    out.witness = std::move(wit);
    return out;
  }
  const Matrix s = pinv_sqrt(a, 1e-10);
  const SymmetricEigen e = jacobi_eigen(symmetrize(s * b * s));
  out.radius_deviation = std::fabs(e.values.back() - 1.0);
  return out;
}

Vector toward_vertex(std::size_t n, std::size_t x, double eps) {
  Vector p(n, eps / static_cast<double>(n));
  p[x] += 1.0 - eps;
  return p;
}

}  // namespace

bool numerically_singular(const Matrix& m, double det_tol) {
  if (!m.square()) return true;
  const LuDecomposition d = lu_decompose(m);
  return d.min_pivot <= det_tol * std::max(max_row_norm(m), 1e-300);
}

bool majorizes(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) fail(Errc::kDimensionMismatch, "majorizes: lengths differ");
  const double sx = std::accumulate(x.begin(), x.end(), 0.0);
  const double sy = std::accumulate(y.begin(), y.end(), 0.0);
  if (std::fabs(sx - sy) > 1e-9) fail(Errc::kParameter, "majorizes: sums differ");
  Vector xs(x.begin(), x.end()), ys(y.begin(), y.end());
  std::sort(xs.begin(), xs.end());
  std::sort(ys.begin(), ys.end());
  double px = 0.0, py = 0.0;
  for (std::size_t k = 0; k + 1 < xs.size(); ++k) {
    px += xs[k];
    py += ys[k];
    if (px > py + 1e-12) return false;
  }
  return true;
}

DominationVerdict group_majorizes(const FiniteAbelianGroup& g, std::span<const double> x,
                                  std::span<const double> y, const PreorderOptions& opts) {
  const std::size_t q = g.order();
  if (x.size() != q || y.size() != q)
    fail(Errc::kDimensionMismatch, "group_majorizes: vectors must have length |G|");
  // (x circ(lambda))_b = sum_i lambda_i x_{b - i}
  LpProblem lp{Matrix(q + 1, q), Vector(q + 1, 1.0)};
  for (std::size_t b = 0; b < q; ++b) {
    lp.b[b] = y[b];
    for (std::size_t i = 0; i < q; ++i) lp.a(b, i) = x[g.add(b, g.negate(i))];
  }
  for (std::size_t i = 0; i < q; ++i) lp.a(q, i) = 1.0;
  const LpResult r = solve_phase_one(lp, opts.lp_tol);
  if (!r.feasible) return lp_infeasible(r);
  Certificate c;
  c.kind = CertificateKind::kConvexWeights;
  c.weights = r.x;
  c.residual = max_abs_diff(row_times(x, circulant(g, c.weights)), y);
  return dominates(std::move(c));
}

DominationVerdict is_degraded(const Channel& w, const Channel& v, const PreorderOptions& opts) {
  check_same_inputs(w, v);
  if (auto s = special_case(w, v)) return *s;
  const std::size_t q = w.inputs(), r = w.outputs(), s = v.outputs();
  // Unknown A (r x s) flattened row-major: variable k*s + j.
  LpProblem lp{Matrix(q * s + r, r * s), Vector(q * s + r, 1.0)};
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = 0; j < s; ++j) {
      lp.b[i * s + j] = v.matrix()(i, j);
      for (std::size_t k = 0; k < r; ++k) lp.a(i * s + j, k * s + j) = w.matrix()(i, k);
    }
  for (std::size_t k = 0; k < r; ++k)
    for (std::size_t j = 0; j < s; ++j) lp.a(q * s + k, k * s + j) = 1.0;
  const LpResult res = solve_phase_one(lp, opts.lp_tol);
  if (!res.feasible) return lp_infeasible(res);
  Certificate c;
  c.kind = CertificateKind::kDegradingKernel;
  c.kernel = Matrix(r, s);
  std::copy(res.x.begin(), res.x.end(), c.kernel.data().begin());
  c.residual = max_abs_diff(w.matrix() * c.kernel, v.matrix());
  if (c.residual > opts.lp_tol) {
    Witness wit;
    wit.kind = WitnessKind::kLpInfeasible;
    wit.phase_one_objective = c.residual;
    return fails(std::move(wit));
  }
  return dominates(std::move(c));
}

DominationVerdict is_degraded_additive(const FiniteAbelianGroup& g, const Pmf& w, const Pmf& v,
                                       const PreorderOptions& opts) {
  if (w.size() != g.order() || v.size() != g.order())
    fail(Errc::kDimensionMismatch, "is_degraded_additive: pmfs must have length |G|");
  DominationVerdict out = group_majorizes(g, w, v, opts);
  if (out.certificate) out.certificate->kernel = circulant(g, out.certificate->weights);
  return out;
}

Matrix hessian_form(const Channel& w, std::span<const double> p) {
  if (p.size() != w.inputs()) fail(Errc::kDimensionMismatch, "hessian_form: pmf length");
  const Vector pw = row_times(p, w.matrix());
  Matrix scaled = w.matrix();
  for (std::size_t i = 0; i < scaled.rows(); ++i)
    for (std::size_t j = 0; j < scaled.cols(); ++j) {
      if (!(pw[j] > 0.0)) fail(Errc::kPrecondition, "hessian_form: output pmf has a zero");
      scaled(i, j) /= pw[j];
    }
  return symmetrize(scaled * w.matrix().transpose());
}

double loewner_gap(const Channel& w, const Channel& v, const Pmf& p) {
  check_same_inputs(w, v);
  if (!p.interior()) fail(Errc::kPrecondition, "loewner_gap: pmf must be strictly interior");
  return jacobi_eigen(hessian_form(w, p.values()) - hessian_form(v, p.values())).values.front();
}

PsdCheck psd_check(const Matrix& m, double tol) {
  if (!m.square()) fail(Errc::kDimensionMismatch, "psd_check: matrix must be square");
  PsdCheck out;
  if (m.rows() == 0) {
    out.psd = true;
    return out;
  }
  const SymmetricEigen e = jacobi_eigen(m);
  out.min_eigenvalue = e.values.front();
  out.eigenvector = e.vectors.row_vector(0);
  out.psd = out.min_eigenvalue >= -tol * std::max(1.0, max_abs(m));
  return out;
}

DominationVerdict less_noisy_exact(const Channel& w, const Channel& v,
                                   const PreorderOptions& opts) {
  check_same_inputs(w, v);
  if (!w.square() || !v.square())
    fail(Errc::kDimensionMismatch, "less_noisy_exact: channels must be square");
  if (auto s = special_case(w, v)) return *s;
  if (numerically_singular(w.matrix(), opts.det_tol) ||
      numerically_singular(v.matrix(), opts.det_tol))
    fail(Errc::kSingular, "less_noisy_exact: singular channel; use less_noisy_sampled");
  const Matrix wi = inverse(w.matrix()), vi = inverse(v.matrix());
  const std::size_t q = w.inputs();
  for (std::size_t x = 0; x < q; ++x) {
    const Matrix a = inverse_form(wi, w.matrix().row(x));
    const Matrix b = inverse_form(vi, v.matrix().row(x));
    const double scale = std::max({1.0, max_abs(a), max_abs(b)});
    const PsdCheck c = psd_check(b - a, opts.psd_tol * scale);
    if (!c.psd) {
      Witness wit;
      wit.kind = WitnessKind::kVertexPsd;
      wit.vertex = x;
      wit.eigenvalue = c.min_eigenvalue;
      wit.direction = c.eigenvector;
      wit.probe_index = x;
      return fails(std::move(wit));
    }
  }
  Certificate c;
  c.kind = CertificateKind::kVertexPsd;
  c.vertices_checked = q;
  return dominates(std::move(c));
}

DominationVerdict less_noisy_sampled(const Channel& w, const Channel& v, std::size_t samples,
                                     std::uint64_t seed, const PreorderOptions& opts) {
  check_same_inputs(w, v);
  const std::size_t q = w.inputs();
  std::size_t probe = 0;
  auto found = [&](Witness wit, std::size_t used) {
    wit.probe_index = probe;
    DominationVerdict out = fails(std::move(wit));
    out.samples_used = used;
    return out;
  };

  // Deterministic probes: uniform against each vertex, both orders.
  const Vector u = Pmf::uniform(q).values();
  for (std::size_t x = 0; x < q; ++x) {
    const Vector d = Pmf::delta(q, x).values();
    for (const auto& [p, r] : {std::pair{u, d}, std::pair{d, u}}) {
      if (auto wit = pair_violation(w, v, p, r, opts.divergence_tol)) return found(*wit, 0);
      ++probe;
    }
  }
  // Interior points approaching each vertex.
  for (double eps : {0.1, 0.01, 0.001}) {
    for (std::size_t x = 0; x < q; ++x) {
      SampleOutcome o = hessian_probe(w, v, toward_vertex(q, x, eps), opts);
      if (o.witness) return found(*o.witness, 0);
      ++probe;
    }
  }

  double deviation = 0.0;
  for (std::size_t i = 0; i < samples; ++i, ++probe) {
    Rng rng(derive_seed(seed, i));
    Vector p = sample_interior_pmf(rng, q);
    if (i % 2 == 1) {
      // Alternate samples concentrate near the boundary, where failures of
      // the vertex conditions first show up.
      const Vector near = sample_near_vertex_pmf(rng, q);
      for (std::size_t k = 0; k < q; ++k) p[k] = (1.0 - 1e-6) * near[k] + 1e-6 / q;
    }
    SampleOutcome o = hessian_probe(w, v, p, opts);
    if (o.witness) return found(*o.witness, i + 1);
    // Deviations at rounding level depend on summation order, not on the channels.
    if (o.radius_deviation > opts.psd_tol) deviation = std::max(deviation, o.radius_deviation);
    const Vector r = sample_interior_pmf(rng, q);
    if (auto wit = pair_violation(w, v, p, r, opts.divergence_tol)) return found(*wit, i + 1);
  }
  DominationVerdict out;
  out.status = Status::kUndetermined;
  out.samples_used = samples;
  out.spectral_radius_deviation = deviation;
  return out;
}

DominationVerdict less_noisy(const Channel& w, const Channel& v, std::size_t samples,
                             std::uint64_t seed, const PreorderOptions& opts) {
  check_same_inputs(w, v);
  if (auto s = special_case(w, v)) return *s;
  if (w.square() && v.square() && !numerically_singular(w.matrix(), opts.det_tol) &&
      !numerically_singular(v.matrix(), opts.det_tol))
    return less_noisy_exact(w, v, opts);
  return less_noisy_sampled(w, v, samples, seed, opts);
}

std::optional<std::pair<Pmf, Pmf>> chi2_violation_from_witness(const Channel& w,
                                                               const Channel& v,
                                                               const Witness& witness) {
  if (witness.kind != WitnessKind::kVertexPsd) return std::nullopt;
  check_same_inputs(w, v);
  const std::size_t q = w.inputs();
  for (double eps : {0.5, 0.1, 1e-2, 1e-3, 1e-4, 1e-5, 1e-6}) {
    const Vector qv = toward_vertex(q, witness.vertex, eps);
    const Matrix gap = hessian_form(w, qv) - hessian_form(v, qv);
    const SymmetricEigen e = jacobi_eigen(gap);
    if (e.values.front() >= 0.0) continue;
    // (A - B) Q^T = 0, so d = y - (y.1) Q keeps the quadratic form and sums
    // to zero.
    const Vector y = e.vectors.row_vector(0);
    const double total = std::accumulate(y.begin(), y.end(), 0.0);
    Vector d(q);
    for (std::size_t k = 0; k < q; ++k) d[k] = y[k] - total * qv[k];
    double t = 1.0;
    for (std::size_t k = 0; k < q; ++k)
      if (d[k] < 0.0) t = std::min(t, qv[k] / -d[k]);
    t *= 0.5;
    Vector p(q);
    for (std::size_t k = 0; k < q; ++k) p[k] = std::max(0.0, qv[k] + t * d[k]);
    const double sum = std::accumulate(p.begin(), p.end(), 0.0);
    for (double& x : p) x /= sum;
    const DivergenceValue dw = chi2(row_times(p, w.matrix()), row_times(qv, w.matrix()));
    const DivergenceValue dv = chi2(row_times(p, v.matrix()), row_times(qv, v.matrix()));
    if (!dw.at_least(dv, 1e-12 * std::max(1.0, dv.value())))
      return std::pair{Pmf(p), Pmf(qv)};
  }
  return std::nullopt;
}

}  // namespace chorder
