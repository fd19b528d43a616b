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

#ifndef CHORDER_SRC_KERNELS_INTERNAL_H_
#define CHORDER_SRC_KERNELS_INTERNAL_H_

#include "chorder/kernels.h"

namespace chorder::kernels {
#if defined(CHORDER_HAVE_AVX2)
namespace avx2 {
const KernelTable& table();
}
#endif
#if defined(CHORDER_HAVE_NEON)
namespace neon {
const KernelTable& table();
}
#endif
}  // namespace chorder::kernels

#endif  // CHORDER_SRC_KERNELS_INTERNAL_H_
