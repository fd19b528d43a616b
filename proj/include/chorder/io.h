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

#ifndef CHORDER_IO_H_
#define CHORDER_IO_H_

#include <filesystem>
#include <string>
#include <string_view>

#include "chorder/channels.h"
#include "chorder/dirichlet.h"
#include "chorder/groups.h"
#include "chorder/preorders.h"
#include "chorder/symdom.h"
#include "json.hpp"

namespace chorder {

// Parsing from text. JSON input is recognised by a leading '{' or '['.
// CSV: one row per line, comma separated, '#' starts a comment.
Matrix parse_matrix(std::string_view text);
Vector parse_vector(std::string_view text);
CayleyTable parse_table(std::string_view text);

// File loaders; I/O and parse problems throw Errc::kParse.
Channel load_channel(const std::filesystem::path& path);
Pmf load_pmf(const std::filesystem::path& path);
FiniteAbelianGroup load_group(const std::filesystem::path& path);

// Rounds to 9 significant digits; the JSON writer then prints the shortest
// representation that reads back to the rounded value.
double round9(double x);
// round9 as text, e.g. "0.142857143", "1e-10", "inf".
std::string format9(double x);

nlohmann::json to_json(double x);
nlohmann::json to_json(const Vector& v);
nlohmann::json to_json(const Matrix& m);
nlohmann::json to_json(const DivergenceValue& d);
nlohmann::json to_json(const DominationVerdict& v);
nlohmann::json to_json(const DeltaStarResult& r);
nlohmann::json to_json(const KlDecayReport& r);

}  // namespace chorder

#endif  // CHORDER_IO_H_
