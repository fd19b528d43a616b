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

#ifndef CHORDER_LINALG_H_
#define CHORDER_LINALG_H_

#include <cstddef>
#include <vector>

#include "chorder/matrix.h"

namespace chorder {

// Eigen-decomposition of a real symmetric matrix. values[i] is paired with
// the eigenvector stored in row i of `vectors`; values are ascending.
struct SymmetricEigen {
  Vector values;
  Matrix vectors;
  int sweeps = 0;
};

// Cyclic Jacobi. The input is symmetrized first; asymmetry above 1e-10
// (relative to the largest entry) is rejected.
SymmetricEigen jacobi_eigen(const Matrix& a, int max_sweeps = 100);

struct LuDecomposition {
  Matrix lu;
  std::vector<std::size_t> perm;
  int sign = 1;
  // Smallest |pivot| met during elimination; zero means exactly singular.
  double min_pivot = 0.0;
};

LuDecomposition lu_decompose(const Matrix& a);
double determinant(const Matrix& a);
// Throws Errc::kSingular when a pivot vanishes.
Matrix inverse(const Matrix& a);

// Descending singular values, min(rows, cols) of them. Computed as the
// nonnegative eigenvalues of the symmetric embedding [[0, A], [A^T, 0]], which
// keeps small singular values accurate in absolute terms.
Vector singular_values(const Matrix& a);

// Orthogonal projector onto the range of a symmetric PSD matrix; eigenvalues
// at or below rel_tol * max(1, lambda_max) count as zero.
Matrix range_projector(const Matrix& sym, double rel_tol);

// Moore-Penrose pseudoinverse square root (A^dagger)^{1/2} of a symmetric PSD
// matrix, with the same eigenvalue cut-off as range_projector.
Matrix pinv_sqrt(const Matrix& sym, double rel_tol);

}  // namespace chorder

#endif  // CHORDER_LINALG_H_
