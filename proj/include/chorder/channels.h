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

#ifndef CHORDER_CHANNELS_H_
#define CHORDER_CHANNELS_H_

#include <cstddef>
#include <span>

#include "chorder/groups.h"
#include "chorder/matrix.h"

namespace chorder {

inline constexpr double kPmfTol = 1e-12;
inline constexpr double kRenormalizeTol = 1e-9;

// Probability row vector. Construction normalises sums within 1e-9 of one
// and rejects anything further off, or any negative entry.
class Pmf {
 public:
  explicit Pmf(Vector probs);
  static Pmf uniform(std::size_t n);
  static Pmf delta(std::size_t n, std::size_t x);

  std::size_t size() const { return probs_.size(); }
  double operator[](std::size_t i) const { return probs_[i]; }
  const Vector& values() const { return probs_; }
  operator std::span<const double>() const { return probs_; }
  bool interior() const;

  friend bool operator==(const Pmf&, const Pmf&) = default;

 private:
  Vector probs_;
};

// Row-stochastic q x r matrix whose columns each carry some mass.
class Channel {
 public:
  explicit Channel(Matrix m);

  std::size_t inputs() const { return m_.rows(); }
  std::size_t outputs() const { return m_.cols(); }
  const Matrix& matrix() const { return m_; }
  Pmf row(std::size_t x) const { return Pmf(m_.row_vector(x)); }

  bool doubly_stochastic(double tol = kPmfTol) const;
  bool square() const { return m_.square(); }
  bool is_identity() const;
  bool rows_equal(double tol = kPmfTol) const;

  friend bool operator==(const Channel&, const Channel&) = default;

 private:
  Matrix m_;
};

// Drops all-zero columns so the result satisfies the Channel invariant.
Matrix drop_zero_columns(const Matrix& m);

// W_delta as a channel; delta must lie in [0, 1].
Channel symmetric_channel(std::size_t q, double delta);
// The symmetric matrix family at any real delta: 1 - delta on the diagonal,
// delta / (q - 1) elsewhere. Not necessarily stochastic.
Matrix symmetric_matrix(std::size_t q, double delta);
// Noise pmf w_delta = (1 - delta, delta/(q-1), ..., delta/(q-1)).
Pmf symmetric_noise(std::size_t q, double delta);
Vector symmetric_noise_raw(std::size_t q, double delta);

// Common eigenvalue 1 - delta - delta/(q-1) of W_delta on the complement of 1.
double symmetric_eigenvalue(std::size_t q, double delta);
// tau with W_tau = W_delta^{-1}. Throws Errc::kSingular at delta = (q-1)/q.
double symmetric_inverse_param(std::size_t q, double delta);
// tau with W_eps W_delta = W_tau.
double symmetric_compose_param(std::size_t q, double eps, double delta);

// q-ary erasure channel; the erasure symbol is the last output. At eps = 0
// the empty erasure column is dropped.
Channel erasure_channel(std::size_t q, double eps);

// circ_G(noise).
Channel additive_channel(const FiniteAbelianGroup& g, const Pmf& noise);

// p W.
Pmf push_forward(const Pmf& p, const Channel& w);

}  // namespace chorder

#endif  // CHORDER_CHANNELS_H_
