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

#ifndef CHORDER_GROUPS_H_
#define CHORDER_GROUPS_H_

#include <cstddef>
#include <span>
#include <vector>

#include "chorder/matrix.h"

namespace chorder {

using CayleyTable = std::vector<std::vector<std::size_t>>;

// Finite Abelian group on the labels {0, ..., q-1} with 0 as the identity.
// Instances only come out of validate_group() and the constructors below, so
// a FiniteAbelianGroup always satisfies the group axioms.
class FiniteAbelianGroup {
 public:
  std::size_t order() const { return table_.size(); }
  std::size_t add(std::size_t x, std::size_t y) const { return table_[x][y]; }
  std::size_t negate(std::size_t x) const { return inverse_[x]; }
  const CayleyTable& table() const { return table_; }

  friend bool operator==(const FiniteAbelianGroup&, const FiniteAbelianGroup&) = default;

 private:
  friend FiniteAbelianGroup validate_group(CayleyTable table);
  explicit FiniteAbelianGroup(CayleyTable table);

  CayleyTable table_;
  std::vector<std::size_t> inverse_;
};

// Z/qZ. Throws Errc::kInvalidOrder for q = 0.
FiniteAbelianGroup cyclic_group(std::size_t q);

// Checks, in order: square shape and entry range, Latin square, identity 0,
// two-sided inverses, commutativity, associativity (exhaustive, O(q^3)).
// Each failure has its own Errc.
FiniteAbelianGroup validate_group(CayleyTable table);

// G x H with (g, h) labelled g * |H| + h.
FiniteAbelianGroup direct_product(const FiniteAbelianGroup& g, const FiniteAbelianGroup& h);

// Smallest n >= 1 with x added to itself n times equal to 0.
std::size_t element_order(const FiniteAbelianGroup& g, std::size_t x);

// P_x with columns e_{x+0}, ..., e_{x+(q-1)}, so that (v P_x)_y = v_{x+y}.
Matrix permutation_matrix(const FiniteAbelianGroup& g, std::size_t x);

// circ(x)[a][b] = x_{-a+b}.
Matrix circulant(const FiniteAbelianGroup& g, std::span<const double> x);

// x * circ(y); commutative in (x, y).
Vector group_convolve(const FiniteAbelianGroup& g, std::span<const double> x,
                      std::span<const double> y);

// v P_x, computed by relabelling instead of a matrix product.
Vector shift(const FiniteAbelianGroup& g, std::span<const double> v, std::size_t x);

}  // namespace chorder

#endif  // CHORDER_GROUPS_H_
