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

#ifndef CHORDER_KERNELS_H_
#define CHORDER_KERNELS_H_

// Data-parallel inner loops shared by the dense linear algebra, the simplex
// tableau and the divergence sums. Every kernel has a scalar reference in
// `kernels::scalar`; vector variants live in `kernels::avx2` / `kernels::neon`
// and are picked once at runtime. Results of the vector variants may differ
// from the reference by reassociation round-off only.

#include <cstddef>
#include <span>
#include <string_view>

namespace chorder::kernels {

enum class Isa { kScalar, kAvx2, kNeon };

std::string_view isa_name(Isa isa);

// Best instruction set this binary and CPU both support.
Isa detected_isa();

// Instruction set currently used by the dispatching entry points. Defaults to
// detected_isa(); CHANNEL_ORDER_ISA=scalar in the environment forces the
// reference path.
Isa active_isa();

// Switches the dispatch target. Returns false (and changes nothing) when the
// requested ISA is unavailable.
bool set_isa(Isa isa);

double dot(std::span<const double> x, std::span<const double> y);
// y += a * x
void axpy(double a, std::span<const double> x, std::span<double> y);
// (x, y) <- (c x - s y, s x + c y), elementwise.
void rotate(std::span<double> x, std::span<double> y, double c, double s);
double sum(std::span<const double> x);
double max_abs(std::span<const double> x);

struct KernelTable {
  double (*dot)(const double*, const double*, std::size_t);
  void (*axpy)(double, const double*, double*, std::size_t);
  void (*rotate)(double*, double*, std::size_t, double, double);
  double (*sum)(const double*, std::size_t);
  double (*max_abs)(const double*, std::size_t);
};

// Raw tables, exposed for equivalence tests. `table_for` returns nullptr for
// an ISA that was not compiled in or that the CPU lacks.
const KernelTable& scalar_table();
const KernelTable* table_for(Isa isa);

namespace scalar {
double dot(const double* x, const double* y, std::size_t n);
void axpy(double a, const double* x, double* y, std::size_t n);
void rotate(double* x, double* y, std::size_t n, double c, double s);
double sum(const double* x, std::size_t n);
double max_abs(const double* x, std::size_t n);
}  // namespace scalar

}  // namespace chorder::kernels

#endif  // CHORDER_KERNELS_H_
