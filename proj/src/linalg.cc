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

#include "chorder/linalg.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <utility>

#include "chorder/error.h"
#include "chorder/kernels.h"

namespace chorder {

SymmetricEigen jacobi_eigen(const Matrix& input, int max_sweeps) {
  if (!input.square()) fail(Errc::kDimensionMismatch, "eigen-decomposition needs a square matrix");
  const std::size_t n = input.rows();
  const double scale = std::max(1.0, max_abs(input));
  if (!is_symmetric(input, 1e-10 * scale)) {
    fail(Errc::kPrecondition, "matrix is not symmetric");
  }
  Matrix a = symmetrize(input);
  Matrix vt = Matrix::identity(n);
  SymmetricEigen out;

  auto off_norm = [&] {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) s += a(i, j) * a(i, j);
    return std::sqrt(s);
  };
  const double frob = [&] {
    double s = 0.0;
    for (double v : a.data()) s += v * v;
    return std::sqrt(s);
  }();

  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    const double off = off_norm();
    if (off <= 1e-15 * frob || off == 0.0) break;
    out.sweeps = sweep + 1;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double app = a(p, p);
        const double aqq = a(q, q);
        if (std::fabs(apq) <= 1e-300) continue;
        const double theta = (aqq - app) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        // A <- J^T A J: columns p,q then rows p,q.
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a(k, p);
          const double akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        kernels::rotate(a.row(p), a.row(q), c, s);
        a(p, q) = a(q, p) = 0.0;
        kernels::rotate(vt.row(p), vt.row(q), c, s);
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return a(i, i) < a(j, j); });
  out.values.resize(n);
  out.vectors = Matrix(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = a(order[k], order[k]);
    auto src = vt.row(order[k]);
    std::copy(src.begin(), src.end(), out.vectors.row(k).begin());
  }
  return out;
}

LuDecomposition lu_decompose(const Matrix& a) {
  if (!a.square()) fail(Errc::kDimensionMismatch, "LU needs a square matrix");
  const std::size_t n = a.rows();
  LuDecomposition d{a, std::vector<std::size_t>(n), 1, n == 0 ? 0.0 : INFINITY};
  std::iota(d.perm.begin(), d.perm.end(), 0);
  Matrix& m = d.lu;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    for (std::size_t i = k + 1; i < n; ++i)
      if (std::fabs(m(i, k)) > std::fabs(m(piv, k))) piv = i;
    if (piv != k) {
      std::swap_ranges(m.row(k).begin(), m.row(k).end(), m.row(piv).begin());
      std::swap(d.perm[k], d.perm[piv]);
      d.sign = -d.sign;
    }
    const double pivot = m(k, k);
    d.min_pivot = std::min(d.min_pivot, std::fabs(pivot));
    if (pivot == 0.0) continue;
    for (std::size_t i = k + 1; i < n; ++i) {
      const double f = m(i, k) / pivot;
      m(i, k) = f;
      if (f != 0.0) {
        kernels::axpy(-f, m.row(k).subspan(k + 1), m.row(i).subspan(k + 1));
      }
    }
  }
  return d;
}

double determinant(const Matrix& a) {
  const LuDecomposition d = lu_decompose(a);
  double det = d.sign;
  for (std::size_t i = 0; i < a.rows(); ++i) det *= d.lu(i, i);
  return det;
}

Matrix inverse(const Matrix& a) {
  const LuDecomposition d = lu_decompose(a);
  const std::size_t n = a.rows();
  if (d.min_pivot == 0.0) fail(Errc::kSingular, "matrix is singular");
  Matrix inv(n, n);
  Vector col(n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) col[i] = d.perm[i] == j ? 1.0 : 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      double s = col[i];
      for (std::size_t k = 0; k < i; ++k) s -= d.lu(i, k) * col[k];
      col[i] = s;
    }
    for (std::size_t i = n; i-- > 0;) {
      double s = col[i];
      for (std::size_t k = i + 1; k < n; ++k) s -= d.lu(i, k) * col[k];
      col[i] = s / d.lu(i, i);
    }
    for (std::size_t i = 0; i < n; ++i) inv(i, j) = col[i];
  }
  return inv;
}

Vector singular_values(const Matrix& a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  Matrix emb(m + n, m + n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      emb(i, m + j) = a(i, j);
      emb(m + j, i) = a(i, j);
    }
  SymmetricEigen e = jacobi_eigen(emb);
  const std::size_t k = std::min(m, n);
  Vector sv(k);
  // The top k eigenvalues of the embedding are the singular values.
  for (std::size_t i = 0; i < k; ++i) sv[i] = std::max(0.0, e.values[m + n - 1 - i]);
  return sv;
}

Matrix range_projector(const Matrix& sym, double rel_tol) {
  const SymmetricEigen e = jacobi_eigen(sym);
  const std::size_t n = sym.rows();
  const double cut = rel_tol * std::max(1.0, e.values.empty() ? 0.0 : e.values.back());
  Matrix p(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    if (e.values[k] <= cut) continue;
    auto v = e.vectors.row(k);
    for (std::size_t i = 0; i < n; ++i) kernels::axpy(v[i], v, p.row(i));
  }
  return p;
}

Matrix pinv_sqrt(const Matrix& sym, double rel_tol) {
  const SymmetricEigen e = jacobi_eigen(sym);
  const std::size_t n = sym.rows();
  const double cut = rel_tol * std::max(1.0, e.values.empty() ? 0.0 : e.values.back());
  Matrix p(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    if (e.values[k] <= cut) continue;
    const double w = 1.0 / std::sqrt(e.values[k]);
    auto v = e.vectors.row(k);
    for (std::size_t i = 0; i < n; ++i) kernels::axpy(w * v[i], v, p.row(i));
  }
  return p;
}

}  // namespace chorder
