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

#include "chorder/io.h"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "chorder/error.h"

namespace chorder {

namespace {

using nlohmann::json;

bool looks_like_json(std::string_view text) {
  for (char c : text) {
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') continue;
    return c == '{' || c == '[';
  }
  return false;
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    fail(Errc::kParse, std::string("malformed JSON: ") + e.what());
  }
}

double parse_number(const std::string& cell) {
  std::size_t b = cell.find_first_not_of(" \t\r");
  std::size_t e = cell.find_last_not_of(" \t\r");
  if (b == std::string::npos) fail(Errc::kParse, "empty CSV cell");
  const std::string s = cell.substr(b, e - b + 1);
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (end != s.c_str() + s.size()) fail(Errc::kParse, "not a number: '" + s + "'");
  return v;
}

std::vector<Vector> parse_csv_rows(std::string_view text) {
  std::vector<Vector> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    Vector row;
    std::istringstream cells(line);
    std::string cell;
    while (std::getline(cells, cell, ',')) row.push_back(parse_number(cell));
    if (line.back() == ',') fail(Errc::kParse, "trailing comma in CSV row");
    rows.push_back(std::move(row));
  }
  if (rows.empty()) fail(Errc::kParse, "no data rows");
  for (const Vector& r : rows)
    if (r.size() != rows.front().size()) fail(Errc::kParse, "CSV rows have different lengths");
  return rows;
}

Vector json_vector(const json& j) {
  if (!j.is_array()) fail(Errc::kParse, "expected a JSON array of numbers");
  Vector v;
  for (const json& x : j) {
    if (!x.is_number()) fail(Errc::kParse, "expected a JSON number");
    v.push_back(x.get<double>());
  }
  return v;
}

Matrix json_matrix(const json& j) {
  if (!j.is_array() || j.empty()) fail(Errc::kParse, "expected a non-empty array of rows");
  std::vector<Vector> rows;
  for (const json& r : j) rows.push_back(json_vector(r));
  for (const Vector& r : rows)
    if (r.size() != rows.front().size()) fail(Errc::kParse, "matrix rows have different lengths");
  return Matrix::from_rows(rows);
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::kParse, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string_view certificate_kind_name(CertificateKind k) {
  switch (k) {
    case CertificateKind::kDegradingKernel: return "degrading_kernel";
    case CertificateKind::kConvexWeights: return "convex_weights";
    case CertificateKind::kVertexPsd: return "vertex_psd";
    case CertificateKind::kSpecialCase: return "special_case";
  }
  return "special_case";
}

std::string_view witness_kind_name(WitnessKind k) {
  switch (k) {
    case WitnessKind::kKlPair: return "kl_pair";
    case WitnessKind::kChi2Pair: return "chi2_pair";
    case WitnessKind::kLoewner: return "loewner";
    case WitnessKind::kRange: return "range";
    case WitnessKind::kVertexPsd: return "vertex_psd";
    case WitnessKind::kLpInfeasible: return "lp_infeasible";
    case WitnessKind::kRowsDiffer: return "rows_differ";
  }
  return "lp_infeasible";
}

}  // namespace

Matrix parse_matrix(std::string_view text) {
  if (looks_like_json(text)) {
    const json j = parse_json(text);
    if (j.is_object()) {
      if (!j.contains("matrix")) fail(Errc::kParse, "JSON object lacks \"matrix\"");
      return json_matrix(j["matrix"]);
    }
    return json_matrix(j);
  }
  return Matrix::from_rows(parse_csv_rows(text));
}

Vector parse_vector(std::string_view text) {
  if (looks_like_json(text)) {
    const json j = parse_json(text);
    if (j.is_object()) {
      if (!j.contains("pmf")) fail(Errc::kParse, "JSON object lacks \"pmf\"");
      return json_vector(j["pmf"]);
    }
    return json_vector(j);
  }
  const std::vector<Vector> rows = parse_csv_rows(text);
  if (rows.size() != 1) fail(Errc::kParse, "expected a single CSV row");
  return rows.front();
}

CayleyTable parse_table(std::string_view text) {
  const Matrix m = [&] {
    if (looks_like_json(text)) {
      const json j = parse_json(text);
      if (j.is_object()) {
        if (!j.contains("table")) fail(Errc::kParse, "JSON object lacks \"table\"");
        Matrix t = json_matrix(j["table"]);
        if (j.contains("order") && j["order"] != t.rows())
          fail(Errc::kParse, "\"order\" does not match the table size");
        return t;
      }
      return json_matrix(j);
    }
    return Matrix::from_rows(parse_csv_rows(text));
  }();
  CayleyTable t(m.rows(), std::vector<std::size_t>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const double x = m(i, j);
      if (!(x >= 0.0) || x != std::floor(x)) fail(Errc::kParse, "table entries must be labels");
      t[i][j] = static_cast<std::size_t>(x);
    }
  return t;
}

Channel load_channel(const std::filesystem::path& path) {
  return Channel(parse_matrix(read_file(path)));
}

Pmf load_pmf(const std::filesystem::path& path) { return Pmf(parse_vector(read_file(path))); }

FiniteAbelianGroup load_group(const std::filesystem::path& path) {
  return validate_group(parse_table(read_file(path)));
}

double round9(double x) {
  if (!std::isfinite(x)) return x;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.9g", x);
  return std::strtod(buf, nullptr);
}

std::string format9(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  return json(round9(x)).dump();
}

nlohmann::json to_json(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (std::isnan(x)) return "nan";
  // Avoid printing "-0.0".
  const double r = round9(x);
  return r == 0.0 ? 0.0 : r;
}

nlohmann::json to_json(const Vector& v) {
  json a = json::array();
  for (double x : v) a.push_back(to_json(x));
  return a;
}

nlohmann::json to_json(const Matrix& m) {
  json a = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(to_json(m.row_vector(i)));
  return a;
}

nlohmann::json to_json(const DivergenceValue& d) {
  return d.is_infinite() ? json("inf") : to_json(d.value());
}

nlohmann::json to_json(const DominationVerdict& v) {
  json j;
  j["status"] = status_name(v.status);
  j["samples_used"] = v.samples_used;
  if (v.certificate) {
    const Certificate& c = *v.certificate;
    json cj;
    cj["kind"] = certificate_kind_name(c.kind);
    if (!c.kernel.empty()) cj["kernel"] = to_json(c.kernel);
    if (!c.weights.empty()) cj["weights"] = to_json(c.weights);
    if (c.kind == CertificateKind::kVertexPsd) cj["vertices_checked"] = c.vertices_checked;
    cj["residual"] = to_json(c.residual);
    j["certificate"] = cj;
  }
  if (v.witness) {
    const Witness& w = *v.witness;
    json wj;
    wj["kind"] = witness_kind_name(w.kind);
    switch (w.kind) {
      case WitnessKind::kKlPair:
      case WitnessKind::kChi2Pair:
      case WitnessKind::kRowsDiffer:
        wj["p"] = to_json(w.p);
        wj["q"] = to_json(w.q);
        if (w.w_divergence) wj["w_divergence"] = to_json(*w.w_divergence);
        if (w.v_divergence) wj["v_divergence"] = to_json(*w.v_divergence);
        break;
      case WitnessKind::kLoewner:
        wj["p"] = to_json(w.p);
        wj["eigenvalue"] = to_json(w.eigenvalue);
        wj["direction"] = to_json(w.direction);
        break;
      case WitnessKind::kRange:
        wj["p"] = to_json(w.p);
        wj["residual"] = to_json(w.eigenvalue);
        break;
      case WitnessKind::kVertexPsd:
        wj["vertex"] = w.vertex;
        wj["eigenvalue"] = to_json(w.eigenvalue);
        wj["direction"] = to_json(w.direction);
        break;
      case WitnessKind::kLpInfeasible:
        wj["phase_one_objective"] = to_json(w.phase_one_objective);
        break;
    }
    wj["probe_index"] = w.probe_index;
    j["witness"] = wj;
  }
  if (v.status == Status::kUndetermined)
    j["spectral_radius_deviation"] = to_json(v.spectral_radius_deviation);
  return j;
}

nlohmann::json to_json(const DeltaStarResult& r) {
  json j;
  j["lower"] = to_json(r.lower);
  j["upper"] = to_json(r.upper);
  j["iterations"] = r.iterations;
  j["bracket_width"] = to_json(r.bracket_width);
  j["method"] = method_name(r.method);
  return j;
}

nlohmann::json to_json(const KlDecayReport& r) {
  json j;
  j["alpha"] = to_json(r.alpha);
  json steps = json::array();
  for (const KlDecayStep& s : r.steps)
    steps.push_back({{"n", s.n}, {"lhs", to_json(s.lhs)}, {"bound", to_json(s.bound)}});
  j["steps"] = steps;
  return j;
}

}  // namespace chorder
