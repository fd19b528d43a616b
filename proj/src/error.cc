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

#include "chorder/error.h"

namespace chorder {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::kInvalidOrder: return "invalid-order";
    case Errc::kNotLatinSquare: return "not-latin-square";
    case Errc::kWrongIdentity: return "wrong-identity";
    case Errc::kMissingInverse: return "missing-inverse";
    case Errc::kNonCommutative: return "non-commutative";
    case Errc::kNonAssociative: return "non-associative";
    case Errc::kOutOfRange: return "out-of-range";
    case Errc::kDimensionMismatch: return "dimension-mismatch";
    case Errc::kInvalidPmf: return "invalid-pmf";
    case Errc::kInvalidChannel: return "invalid-channel";
    case Errc::kParameter: return "parameter";
    case Errc::kSingular: return "singular-channel";
    case Errc::kPrecondition: return "precondition";
    case Errc::kParse: return "parse";
  }
  return "unknown";
}

void fail(Errc code, const std::string& what) {
  throw Error(code, std::string(errc_name(code)) + ": " + what);
}

}  // namespace chorder
