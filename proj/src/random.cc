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

#include "chorder/random.h"

#include <algorithm>
#include <cmath>

namespace chorder {

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Vector sample_simplex(Rng& rng, std::size_t n) {
  Vector p(n);
  double total = 0.0;
  for (double& v : p) {
    // Exp(1) draws normalised give Dirichlet(1).
    v = -std::log1p(-rng.uniform());
    total += v;
  }
  for (double& v : p) v /= total;
  return p;
}

Vector sample_interior_pmf(Rng& rng, std::size_t n) {
  constexpr double kMix = 1e-6;
  Vector p = sample_simplex(rng, n);
  for (double& v : p) v = (1.0 - kMix) * v + kMix / static_cast<double>(n);
  return p;
}

Vector sample_near_vertex_pmf(Rng& rng, std::size_t n) {
  const double spread = 0.1 * rng.uniform();
  Vector p = sample_simplex(rng, n);
  for (double& v : p) v *= spread;
  p[rng.index(n)] += 1.0 - spread;
  return p;
}

Matrix sample_stochastic_matrix(Rng& rng, std::size_t rows, std::size_t cols) {
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    Vector r = sample_interior_pmf(rng, cols);
    std::copy(r.begin(), r.end(), m.row(i).begin());
  }
  return m;
}

}  // namespace chorder
