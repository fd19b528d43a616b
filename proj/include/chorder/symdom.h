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

#ifndef CHORDER_SYMDOM_H_
#define CHORDER_SYMDOM_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <ostream>
#include <string_view>
#include <vector>

#include "chorder/channels.h"
#include "chorder/preorders.h"

namespace chorder {

// Ordered from finest to coarsest.
enum class RegionLabel { kDegraded, kLowerHull, kLessNoisy, kCircleOnly, kOutside };
enum class Method { kExact, kSampled };

std::string_view region_label_name(RegionLabel l);
std::string_view method_name(Method m);

struct RegionPoint {
  Pmf noise = Pmf::uniform(1);
  RegionLabel label = RegionLabel::kOutside;
  Method method = Method::kExact;
};

// Smallest delta with W_delta degrading V guaranteed by the minimum entry nu:
// nu / (1 - (q-1) nu + nu / (q-1)).
double thm2_delta_lower(const Channel& v);

// (q-1) min(v): W_delta's noise group-majorises v for every delta up to this.
double additive_degradation_delta(const Pmf& v);

// 1 - delta/(q-1), the noisiest symmetric channel degraded from W_delta.
double extremal_degraded_tau(std::size_t q, double delta);

// (1-delta) / (1 - delta + delta/(q-1)^2): W_delta is less noisy than W_gamma.
double ln_gamma_bound(std::size_t q, double delta);

struct ClassifyOptions {
  std::size_t sampled_budget = 2000;
  std::uint64_t seed = 0;
  PreorderOptions preorder;
};

// Finest label in DEGRADED < LOWER_HULL < LESS_NOISY < CIRCLE_ONLY < OUTSIDE
// for the additive channel with noise v relative to W_delta over Z_q.
RegionPoint classify_noise_pmf(std::size_t q, double delta, const Pmf& v,
                               const ClassifyOptions& opts = {});

// Classifies the barycentric grid {(i, j, n-i-j)/n} for q = 3 in
// lexicographic (i, j) order. threads = 0 uses hardware concurrency.
std::vector<RegionPoint> region_sample(std::size_t q, double delta, std::size_t grid_n,
                                       const ClassifyOptions& opts = {},
                                       std::size_t threads = 1);

// CSV with header v0,v1,v2,label,method and 9 significant digits.
void write_region_csv(std::ostream& out, const std::vector<RegionPoint>& points);
std::map<RegionLabel, std::size_t> region_counts(const std::vector<RegionPoint>& points);

struct DeltaStarResult {
  double lower = 0.0;
  double upper = 0.0;
  std::size_t iterations = 0;
  double bracket_width = 0.0;
  Method method = Method::kExact;
};

// Bisection for sup{delta : W_delta less noisy than V}. For singular V only
// the lower end is certified; upper is the smallest delta with a sampled
// witness, or (q-1)/q.
DeltaStarResult delta_star(const Channel& v, double tol = 1e-6, std::size_t samples = 2000,
                           std::uint64_t seed = 0);

// Lower estimate of sup D(PV||QV) / D(PW_delta||QW_delta).
double domination_factor_estimate(const Channel& v, double delta, std::size_t samples,
                                  std::uint64_t seed);

enum class ScreenOutcome { kPass, kFail, kInconclusive };
std::string_view screen_outcome_name(ScreenOutcome s);

struct ScreenReport {
  double w_distance = 0.0;  // |w - u|
  double v_distance = 0.0;
  ScreenOutcome circle = ScreenOutcome::kPass;
  double w_entropy = 0.0;  // nats
  double v_entropy = 0.0;
  ScreenOutcome entropy = ScreenOutcome::kPass;
  EtaKlBounds w_eta;
  EtaKlBounds v_eta;
  ScreenOutcome contraction = ScreenOutcome::kInconclusive;

  // Any hard failure rules out less-noisy domination.
  bool violated() const {
    return circle == ScreenOutcome::kFail || entropy == ScreenOutcome::kFail ||
           contraction == ScreenOutcome::kFail;
  }
};

// Necessary conditions for the additive channel with noise w to be less noisy
// than the one with noise v (cyclic group).
ScreenReport necessary_screen(const Pmf& w, const Pmf& v, std::size_t eta_samples = 64,
                              std::uint64_t seed = 0);

}  // namespace chorder

#endif  // CHORDER_SYMDOM_H_
