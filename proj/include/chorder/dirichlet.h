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

#ifndef CHORDER_DIRICHLET_H_
#define CHORDER_DIRICHLET_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "chorder/channels.h"
#include "chorder/matrix.h"

namespace chorder {

// A real function on [q]; the stationary distribution is always uniform.
class FunctionOnX {
 public:
  explicit FunctionOnX(Vector values);
  // Scales f so that sum f_k^2 / q = 1.
  static FunctionOnX normalized(Vector values);

  std::size_t size() const { return values_.size(); }
  double operator[](std::size_t i) const { return values_[i]; }
  const Vector& values() const { return values_; }
  operator std::span<const double>() const { return values_; }
  // sum f_k^2 / q
  double norm_squared() const;

 private:
  Vector values_;
};

// (1/q) f^T (I - V) f.
double dirichlet_form(const Channel& v, const FunctionOnX& f);
// Variance of f under the uniform distribution.
double standard_dirichlet(const FunctionOnX& f);

double lsi_constant_symmetric(std::size_t q, double delta);
// LSI constant of W_delta W_delta^T, i.e. of W_{delta'} with
// delta' = delta (2 - q delta / (q-1)).
double discrete_lsi_constant_symmetric(std::size_t q, double delta);

// sum (1/q) f_k^2 log f_k^2 for f with unit norm.
double lsi_functional(const FunctionOnX& f);

// Smallest ratio E_V(f,f) / D(f^2 u || u) over sampled f; an upper bound on
// the log-Sobolev constant of V.
double estimate_lsi_constant(const Channel& v, std::size_t samples, std::uint64_t seed);

enum class DirichletKind { kDiscrete, kContinuous, kStandard };
std::string_view dirichlet_kind_name(DirichletKind k);
DirichletKind parse_dirichlet_kind(std::string_view s);

// discrete:   W W^T - V V^T is PSD
// continuous: (W + W^T)/2 - (V + V^T)/2 is PSD (W PSD, V normal)
// standard:   W_delta - (V + V^T)/2 is PSD (W must be W_delta)
bool dirichlet_domination_check(const Channel& w, const Channel& v, DirichletKind kind,
                                std::optional<double> delta = std::nullopt,
                                double tol = 1e-9);

struct KlDecayStep {
  std::size_t n = 0;
  double lhs = 0.0;    // D(mu V^n || u)
  double bound = 0.0;  // (1 - alpha)^n D(mu || u)
};

struct KlDecayReport {
  double alpha = 0.0;
  std::vector<KlDecayStep> steps;
  bool holds = true;
};

KlDecayReport kl_decay_check(const Channel& v, double alpha, const Pmf& mu0,
                             std::size_t horizon);

}  // namespace chorder

#endif  // CHORDER_DIRICHLET_H_
