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

#include "chorder/channels.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "chorder/error.h"
#include "chorder/kernels.h"

namespace chorder {

Pmf::Pmf(Vector probs) : probs_(std::move(probs)) {
  if (probs_.empty()) fail(Errc::kInvalidPmf, "empty pmf");
  for (double v : probs_) {
    if (!std::isfinite(v) || v < 0.0) fail(Errc::kInvalidPmf, "negative or non-finite entry");
  }
  const double total = kernels::sum(probs_);
  const double gap = std::fabs(total - 1.0);
  if (gap > kRenormalizeTol) {
    fail(Errc::kInvalidPmf, "entries sum to " + std::to_string(total));
  }
  if (gap > kPmfTol) {
    for (double& v : probs_) v /= total;
  }
}

Pmf Pmf::uniform(std::size_t n) {
  return Pmf(Vector(n, 1.0 / static_cast<double>(n)));
}

Pmf Pmf::delta(std::size_t n, std::size_t x) {
  if (x >= n) fail(Errc::kOutOfRange, "delta index");
  Vector v(n, 0.0);
  v[x] = 1.0;
  return Pmf(std::move(v));
}

bool Pmf::interior() const {
  return std::all_of(probs_.begin(), probs_.end(), [](double v) { return v > 0.0; });
}

Channel::Channel(Matrix m) : m_(std::move(m)) {
  if (m_.rows() == 0 || m_.cols() == 0) fail(Errc::kInvalidChannel, "empty channel");
  for (std::size_t i = 0; i < m_.rows(); ++i) {
    try {
      Pmf row(m_.row_vector(i));
      std::copy(row.values().begin(), row.values().end(), m_.row(i).begin());
    } catch (const Error& e) {
      fail(Errc::kInvalidChannel, "row " + std::to_string(i) + ": " + e.what());
    }
  }
  for (std::size_t j = 0; j < m_.cols(); ++j) {
    bool any = false;
    for (std::size_t i = 0; i < m_.rows() && !any; ++i) any = m_(i, j) > 0.0;
    if (!any) fail(Errc::kInvalidChannel, "column " + std::to_string(j) + " is all zero");
  }
}

bool Channel::doubly_stochastic(double tol) const {
  if (!m_.square()) return false;
  for (std::size_t j = 0; j < m_.cols(); ++j) {
    double s = 0.0;
    for (std::size_t i = 0; i < m_.rows(); ++i) s += m_(i, j);
    if (std::fabs(s - 1.0) > tol) return false;
  }
  return true;
}

bool Channel::is_identity() const {
  return m_.square() && m_ == Matrix::identity(m_.rows());
}

bool Channel::rows_equal(double tol) const {
  for (std::size_t i = 1; i < m_.rows(); ++i)
    if (max_abs_diff(m_.row(i), m_.row(0)) > tol) return false;
  return true;
}

Matrix drop_zero_columns(const Matrix& m) {
  std::vector<std::size_t> keep;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (m(i, j) != 0.0) {
        keep.push_back(j);
        break;
      }
    }
  }
  Matrix out(m.rows(), keep.size());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t k = 0; k < keep.size(); ++k) out(i, k) = m(i, keep[k]);
  return out;
}

namespace {

void check_alphabet(std::size_t q) {
  if (q < 2) fail(Errc::kParameter, "alphabet size must be at least 2");
}

}  // namespace

Matrix symmetric_matrix(std::size_t q, double delta) {
  check_alphabet(q);
  const double off = delta / static_cast<double>(q - 1);
  Matrix m(q, q, off);
  for (std::size_t i = 0; i < q; ++i) m(i, i) = 1.0 - delta;
  return m;
}

Channel symmetric_channel(std::size_t q, double delta) {
  check_alphabet(q);
  if (!(delta >= 0.0 && delta <= 1.0)) {
    fail(Errc::kParameter, "crossover probability must lie in [0, 1]");
  }
  return Channel(symmetric_matrix(q, delta));
}

Vector symmetric_noise_raw(std::size_t q, double delta) {
  check_alphabet(q);
  Vector w(q, delta / static_cast<double>(q - 1));
  w[0] = 1.0 - delta;
  return w;
}

Pmf symmetric_noise(std::size_t q, double delta) {
  if (!(delta >= 0.0 && delta <= 1.0)) {
    fail(Errc::kParameter, "crossover probability must lie in [0, 1]");
  }
  return Pmf(symmetric_noise_raw(q, delta));
}

double symmetric_eigenvalue(std::size_t q, double delta) {
  check_alphabet(q);
  const double qd = static_cast<double>(q);
  return 1.0 - delta * qd / (qd - 1.0);
}

double symmetric_inverse_param(std::size_t q, double delta) {
  const double lambda = symmetric_eigenvalue(q, delta);
  if (std::fabs(lambda) <= 1e-12) fail(Errc::kSingular, "W_delta is singular at delta = (q-1)/q");
  return -delta / lambda;
}

double symmetric_compose_param(std::size_t q, double eps, double delta) {
  check_alphabet(q);
  return eps + delta - eps * delta - eps * delta / static_cast<double>(q - 1);
}

Channel erasure_channel(std::size_t q, double eps) {
  check_alphabet(q);
  if (!(eps >= 0.0 && eps <= 1.0)) fail(Errc::kParameter, "erasure probability must lie in [0, 1]");
  Matrix m(q, q + 1);
  for (std::size_t i = 0; i < q; ++i) {
    m(i, i) = 1.0 - eps;
    m(i, q) = eps;
  }
  return Channel(drop_zero_columns(m));
}

Channel additive_channel(const FiniteAbelianGroup& g, const Pmf& noise) {
  if (noise.size() != g.order()) fail(Errc::kDimensionMismatch, "noise length");
  return Channel(circulant(g, noise.values()));
}

Pmf push_forward(const Pmf& p, const Channel& w) {
  if (p.size() != w.inputs()) fail(Errc::kDimensionMismatch, "pmf length vs channel inputs");
  Vector out = row_times(p.values(), w.matrix());
  for (double& v : out) v = std::max(0.0, v);
  return Pmf(std::move(out));
}

}  // namespace chorder
