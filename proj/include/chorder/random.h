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

#ifndef CHORDER_RANDOM_H_
#define CHORDER_RANDOM_H_

#include <cstddef>
#include <cstdint>
#include <random>

#include "chorder/matrix.h"

namespace chorder {

// Deterministic generator used by every sampled procedure. Sampling APIs take
// a seed; parallel callers derive per-item streams with derive_seed().
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform() { return std::uniform_real_distribution<double>(0.0, 1.0)(engine_); }
  double normal() { return std::normal_distribution<double>(0.0, 1.0)(engine_); }
  std::size_t index(std::size_t n) {
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(engine_);
  }
  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

// splitmix64 of (seed, index); stable across runs and thread counts.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

// Symmetric Dirichlet(1), i.e. uniform on the simplex.
Vector sample_simplex(Rng& rng, std::size_t n);

// Dirichlet(1) mixed with 1e-6 of uniform, so every entry is positive.
Vector sample_interior_pmf(Rng& rng, std::size_t n);

// Pmf with most of its mass on one random coordinate; the rest is spread by
// a Dirichlet(1) draw scaled to a random share in (0, 0.1).
Vector sample_near_vertex_pmf(Rng& rng, std::size_t n);

// Random row-stochastic matrix with Dirichlet(1) rows mixed into the interior.
Matrix sample_stochastic_matrix(Rng& rng, std::size_t rows, std::size_t cols);

}  // namespace chorder

#endif  // CHORDER_RANDOM_H_
