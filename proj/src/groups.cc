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

#include "chorder/groups.h"

#include <algorithm>
#include <string>

#include "chorder/error.h"

namespace chorder {

FiniteAbelianGroup::FiniteAbelianGroup(CayleyTable table)
    : table_(std::move(table)), inverse_(table_.size()) {
  const std::size_t q = table_.size();
  for (std::size_t x = 0; x < q; ++x)
    for (std::size_t y = 0; y < q; ++y)
      if (table_[x][y] == 0) inverse_[x] = y;
}

FiniteAbelianGroup cyclic_group(std::size_t q) {
  if (q == 0) fail(Errc::kInvalidOrder, "group order must be positive");
  CayleyTable t(q, std::vector<std::size_t>(q));
  for (std::size_t x = 0; x < q; ++x)
    for (std::size_t y = 0; y < q; ++y) t[x][y] = (x + y) % q;
  return validate_group(std::move(t));
}

FiniteAbelianGroup validate_group(CayleyTable t) {
  const std::size_t q = t.size();
  if (q == 0) fail(Errc::kInvalidOrder, "group order must be positive");
  for (const auto& row : t) {
    if (row.size() != q) fail(Errc::kDimensionMismatch, "Cayley table must be square");
    for (std::size_t v : row)
      if (v >= q) fail(Errc::kOutOfRange, "Cayley table entry " + std::to_string(v));
  }

  std::vector<char> seen(q);
  for (std::size_t x = 0; x < q; ++x) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t y = 0; y < q; ++y) {
      if (seen[t[x][y]]++) fail(Errc::kNotLatinSquare, "row " + std::to_string(x) + " repeats");
    }
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t y = 0; y < q; ++y) {
      if (seen[t[y][x]]++) fail(Errc::kNotLatinSquare, "column " + std::to_string(x) + " repeats");
    }
  }

  for (std::size_t x = 0; x < q; ++x) {
    if (t[0][x] != x || t[x][0] != x) fail(Errc::kWrongIdentity, "0 is not the identity");
  }

  for (std::size_t x = 0; x < q; ++x) {
    std::size_t right = q;
    for (std::size_t y = 0; y < q; ++y)
      if (t[x][y] == 0) right = y;
    if (right == q || t[right][x] != 0) {
      fail(Errc::kMissingInverse, "element " + std::to_string(x) + " has no two-sided inverse");
    }
  }

  for (std::size_t x = 0; x < q; ++x)
    for (std::size_t y = x + 1; y < q; ++y)
      if (t[x][y] != t[y][x]) {
        fail(Errc::kNonCommutative,
             std::to_string(x) + "+" + std::to_string(y) + " differs from its swap");
      }

  for (std::size_t x = 0; x < q; ++x)
    for (std::size_t y = 0; y < q; ++y)
      for (std::size_t z = 0; z < q; ++z)
        if (t[t[x][y]][z] != t[x][t[y][z]]) {
          fail(Errc::kNonAssociative, "(" + std::to_string(x) + "+" + std::to_string(y) +
                                          ")+" + std::to_string(z));
        }

  return FiniteAbelianGroup(std::move(t));
}

FiniteAbelianGroup direct_product(const FiniteAbelianGroup& g, const FiniteAbelianGroup& h) {
  const std::size_t m = g.order();
  const std::size_t n = h.order();
  CayleyTable t(m * n, std::vector<std::size_t>(m * n));
  for (std::size_t a = 0; a < m * n; ++a)
    for (std::size_t b = 0; b < m * n; ++b)
      t[a][b] = g.add(a / n, b / n) * n + h.add(a % n, b % n);
  return validate_group(std::move(t));
}

std::size_t element_order(const FiniteAbelianGroup& g, std::size_t x) {
  if (x >= g.order()) fail(Errc::kOutOfRange, "element out of range");
  std::size_t acc = x;
  std::size_t k = 1;
  while (acc != 0) {
    acc = g.add(acc, x);
    ++k;
  }
  return k;
}

Matrix permutation_matrix(const FiniteAbelianGroup& g, std::size_t x) {
  const std::size_t q = g.order();
  if (x >= q) fail(Errc::kOutOfRange, "element " + std::to_string(x));
  Matrix p(q, q);
  for (std::size_t y = 0; y < q; ++y) p(g.add(x, y), y) = 1.0;
  return p;
}

Matrix circulant(const FiniteAbelianGroup& g, std::span<const double> x) {
  const std::size_t q = g.order();
  if (x.size() != q) fail(Errc::kDimensionMismatch, "circulant vector length");
  Matrix c(q, q);
  for (std::size_t a = 0; a < q; ++a)
    for (std::size_t b = 0; b < q; ++b) c(a, b) = x[g.add(g.negate(a), b)];
  return c;
}

Vector group_convolve(const FiniteAbelianGroup& g, std::span<const double> x,
                      std::span<const double> y) {
  const std::size_t q = g.order();
  if (x.size() != q || y.size() != q) fail(Errc::kDimensionMismatch, "convolution length");
  Vector out(q, 0.0);
  for (std::size_t a = 0; a < q; ++a)
    for (std::size_t b = 0; b < q; ++b) out[b] += x[a] * y[g.add(g.negate(a), b)];
  return out;
}

Vector shift(const FiniteAbelianGroup& g, std::span<const double> v, std::size_t x) {
  const std::size_t q = g.order();
  if (v.size() != q) fail(Errc::kDimensionMismatch, "shift length");
  if (x >= q) fail(Errc::kOutOfRange, "element " + std::to_string(x));
  Vector out(q);
  for (std::size_t y = 0; y < q; ++y) out[y] = v[g.add(x, y)];
  return out;
}

}  // namespace chorder
