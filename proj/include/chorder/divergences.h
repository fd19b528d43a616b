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

#ifndef CHORDER_DIVERGENCES_H_
#define CHORDER_DIVERGENCES_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>

#include "chorder/channels.h"
#include "chorder/matrix.h"

namespace chorder {

// Divergence in nats, with +inf kept as a tag rather than a float overflow.
class DivergenceValue {
 public:
  static DivergenceValue finite(double v) { return DivergenceValue(v, false); }
  static DivergenceValue infinity() { return DivergenceValue(0.0, true); }

  bool is_infinite() const { return infinite_; }
  // Only meaningful when finite.
  double value() const { return value_; }
  // +inf as a double, for reporting.
  double as_double() const;
  std::string to_string() const;

  // this >= other - tol, with inf >= anything and finite < inf.
  bool at_least(const DivergenceValue& other, double tol) const;

 private:
  DivergenceValue(double v, bool inf) : value_(v), infinite_(inf) {}
  double value_;
  bool infinite_;
};

DivergenceValue kl(std::span<const double> p, std::span<const double> q);
DivergenceValue chi2(std::span<const double> p, std::span<const double> q);
double tv_distance(std::span<const double> p, std::span<const double> q);
// Shannon entropy in nats.
double entropy(std::span<const double> p);

// Dobrushin coefficient: largest total variation between two rows.
double eta_tv(const Channel& w);

// Second singular value of diag(p)^{1/2} W diag(pW)^{-1/2}. p and pW must be
// strictly positive.
double maximal_correlation(const Pmf& p, const Channel& w);

struct EtaKlBounds {
  double lower = 0.0;
  double upper = 0.0;
  std::size_t samples = 0;
};

// Bracket on the KL (equivalently chi^2) contraction coefficient:
// lower = max over sampled interior Q of rho_max(Q, W)^2 (u is always
// included), upper = eta_tv(W).
EtaKlBounds eta_kl_bounds(const Channel& w, std::size_t samples, std::uint64_t seed);

struct LocalApproxReport {
  Vector lambdas;
  // (2 / lambda^2) D(lambda p + (1 - lambda) q || q) for each lambda.
  Vector values;
  double chi2 = 0.0;
  // |values.back() - chi2|.
  double final_gap = 0.0;
};

LocalApproxReport kl_chi2_local_check(const Pmf& p, const Pmf& q,
                                      std::span<const double> lambdas);

struct IntegralReport {
  double integral = 0.0;
  double kl = 0.0;
  // |integral - kl| / kl, or |integral| when kl = 0.
  double relative_error = 0.0;
  std::size_t nodes = 0;
};

// KL as the integral over t in [0, inf) of chi^2(p || t/(1+t) p + 1/(1+t) q)
// / (t + 1), mapped to s in [0, 1] by t = s / (1 - s) and integrated with
// composite Simpson on `nodes` intervals (rounded up to even).
IntegralReport kl_chi2_integral_check(const Pmf& p, const Pmf& q, std::size_t nodes = 10000);

}  // namespace chorder

#endif  // CHORDER_DIVERGENCES_H_
