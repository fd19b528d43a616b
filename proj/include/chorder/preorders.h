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

#ifndef CHORDER_PREORDERS_H_
#define CHORDER_PREORDERS_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <utility>

#include "chorder/channels.h"
#include "chorder/divergences.h"
#include "chorder/groups.h"
#include "chorder/matrix.h"

namespace chorder {

enum class Status { kDominates, kFails, kUndetermined };
std::string_view status_name(Status s);

enum class CertificateKind {
  kDegradingKernel,  // V = W A with A row-stochastic
  kConvexWeights,    // y = x circ(lambda) with lambda a pmf
  kVertexPsd,        // all q vertex Loewner checks passed
  kSpecialCase,      // identity W or constant-row V
};

struct Certificate {
  CertificateKind kind = CertificateKind::kSpecialCase;
  Matrix kernel;   // kDegradingKernel
  Vector weights;  // kConvexWeights
  // max |W A - V| or max |x circ(lambda) - y| for the returned certificate.
  double residual = 0.0;
  std::size_t vertices_checked = 0;
};

enum class WitnessKind {
  kKlPair,        // D(PW||QW) < D(PV||QV)
  kChi2Pair,      // chi^2(PW||QW) < chi^2(PV||QV)
  kLoewner,       // negative eigenvalue of the Hessian-form difference at P
  kRange,         // range inclusion fails at P
  kVertexPsd,     // negative eigenvalue of the inverted form at a vertex
  kLpInfeasible,  // phase-one optimum above tolerance
  kRowsDiffer,    // W has equal rows while V does not
};

struct Witness {
  WitnessKind kind = WitnessKind::kLpInfeasible;
  // Pmf pair for kKlPair / kChi2Pair / kRowsDiffer; p alone for kLoewner and
  // kRange.
  Vector p;
  Vector q;
  std::optional<DivergenceValue> w_divergence;
  std::optional<DivergenceValue> v_divergence;
  std::size_t vertex = 0;
  double eigenvalue = 0.0;
  Vector direction;
  double phase_one_objective = 0.0;
  // Position in the probe sequence at which the violation was found.
  std::size_t probe_index = 0;
};

struct DominationVerdict {
  Status status = Status::kUndetermined;
  std::optional<Certificate> certificate;
  std::optional<Witness> witness;
  std::size_t samples_used = 0;
  // Sampled less-noisy runs only: largest |rho(A^+ B) - 1| seen where no
  // violation occurred. Always ~0 in theory; kept as a sanity statistic.
  double spectral_radius_deviation = 0.0;

  bool dominates() const { return status == Status::kDominates; }
  bool fails() const { return status == Status::kFails; }
};

struct PreorderOptions {
  double lp_tol = 1e-9;
  // Relative to max(1, largest entry of the matrices being compared).
  double psd_tol = 1e-9;
  // Relative to the largest row norm; pivots below this mean singular.
  double det_tol = 1e-10;
  // Slack when comparing divergences, relative to max(1, |value|).
  double divergence_tol = 1e-9;
};

// Majorisation y <= x: ascending partial sums of x never exceed those of y.
// Throws Errc::kParameter when the sums differ by more than 1e-9.
bool majorizes(std::span<const double> x, std::span<const double> y);

// y in conv{x P_g : g in G}, certified by convex weights lambda with
// y = x circ(lambda).
DominationVerdict group_majorizes(const FiniteAbelianGroup& g, std::span<const double> x,
                                  std::span<const double> y,
                                  const PreorderOptions& opts = {});

// V = W A for a row-stochastic A, decided by phase-one LP.
DominationVerdict is_degraded(const Channel& w, const Channel& v,
                              const PreorderOptions& opts = {});

// circ(v) degraded from circ(w); equivalent to w group-majorising v.
DominationVerdict is_degraded_additive(const FiniteAbelianGroup& g, const Pmf& w, const Pmf& v,
                                       const PreorderOptions& opts = {});

// Exact less-noisy test for square invertible W, V: for every vertex x,
// V^{-T} diag(row_x V) V^{-1} - W^{-T} diag(row_x W) W^{-1} must be PSD.
// Throws Errc::kSingular when either matrix is numerically singular.
DominationVerdict less_noisy_exact(const Channel& w, const Channel& v,
                                   const PreorderOptions& opts = {});

// Necessary-condition search: vertex/uniform pmf pairs first, then sampled
// interior inputs for the range/Loewner conditions and sampled pairs for the
// KL and chi^2 inequalities. Never returns kDominates.
DominationVerdict less_noisy_sampled(const Channel& w, const Channel& v, std::size_t samples,
                                     std::uint64_t seed, const PreorderOptions& opts = {});

// Front end used by the CLI: special cases, then the exact test when both
// matrices are square and invertible, else the sampled test.
DominationVerdict less_noisy(const Channel& w, const Channel& v, std::size_t samples,
                             std::uint64_t seed, const PreorderOptions& opts = {});

// True when LU finds a pivot below det_tol times the largest row norm.
bool numerically_singular(const Matrix& m, double det_tol = 1e-10);

// W diag(pW)^{-1} W^T for interior p.
Matrix hessian_form(const Channel& w, std::span<const double> p);

// Smallest eigenvalue of hessian_form(W, p) - hessian_form(V, p).
double loewner_gap(const Channel& w, const Channel& v, const Pmf& p);

struct PsdCheck {
  bool psd = false;
  double min_eigenvalue = 0.0;
  Vector eigenvector;
};

// PSD iff lambda_min >= -tol * max(1, max |M_ij|).
PsdCheck psd_check(const Matrix& m, double tol = 1e-9);

// Turns a vertex witness from less_noisy_exact into an explicit pmf pair
// (P, Q) with chi^2(PW||QW) < chi^2(PV||QV). Q sits just inside the simplex
// near the failing vertex.
std::optional<std::pair<Pmf, Pmf>> chi2_violation_from_witness(const Channel& w,
                                                               const Channel& v,
                                                               const Witness& witness);

}  // namespace chorder

#endif  // CHORDER_PREORDERS_H_
