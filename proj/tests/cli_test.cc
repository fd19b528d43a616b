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

#include <sys/wait.h>

#include <unistd.h>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "chorder/channels.h"
#include "doctest.h"
#include "json.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Run {
  int code = -1;
  std::string out;
  json parsed() const { return json::parse(out); }
};

Run run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " + CHANNEL_ORDER_BIN + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

class Fixture {
 public:
  Fixture() : dir_(fs::temp_directory_path() / ("chorder_cli_" + std::to_string(::getpid()))) {
    fs::create_directories(dir_);
  }
  ~Fixture() { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) const {
    std::ofstream(dir_ / name) << text;
    return (dir_ / name).string();
  }
  std::string channel(const std::string& name, const chorder::Matrix& m) const {
    std::ostringstream s;
    s.precision(17);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      for (std::size_t j = 0; j < m.cols(); ++j) s << (j ? "," : "") << m(i, j);
      s << '\n';
    }
    return write(name, s.str());
  }
  std::string symmetric(const std::string& name, std::size_t q, double d) const {
    return channel(name, chorder::symmetric_matrix(q, d));
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

 private:
  fs::path dir_;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("check-degraded") {
  Fixture fx;
  const auto w = fx.symmetric("w.csv", 3, 0.2);
  const Run ok = run("check-degraded --w " + w + " --v " + fx.symmetric("v.csv", 3, 0.9));
  CHECK(ok.code == 0);
  CHECK(ok.parsed()["status"] == "Dominates");
  CHECK(ok.parsed()["certificate"]["kernel"].size() == 3);
  CHECK(run("check-degraded --w " + w + " --v " + fx.symmetric("v2.csv", 3, 0.95)).code == 1);
  CHECK(run("check-degraded --w " + w + " --v " + fx.write("t.csv", "0.8,0.1,0.1\n0.1,0.8\n")).code == 2);
  CHECK(run("check-degraded --w " + w + " --v " + fx.path("missing.csv")).code == 2);
  CHECK(run("check-degraded --w " + w).code == 2);

  const auto pw = fx.write("pw.csv", "0.8,0.1,0.1\n");
  const Run add = run("check-degraded --additive --w " + pw + " --v " + fx.write("pv.csv", "0.5,0.3,0.2\n"));
  CHECK(add.code == 0);
  CHECK(add.parsed()["certificate"]["weights"].size() == 3);
  CHECK(run("check-degraded --additive --w " + pw + " --v " + fx.write("pf.csv", "0.85,0.1,0.05\n")).code == 1);
  const auto klein = fx.write("k.json", R"({"order":4,"table":[[0,1,2,3],[1,0,3,2],[2,3,0,1],[3,2,1,0]]})");
  CHECK(run("check-degraded --additive --group " + klein + " --w " +
            fx.write("k1.csv", "0.7,0.1,0.1,0.1\n") + " --v " + fx.write("k2.csv", "0.25,0.25,0.25,0.25\n"))
            .code == 0);
}

TEST_CASE("check-less-noisy") {
  Fixture fx;
  const auto w = fx.symmetric("w.csv", 3, 0.2);
  const Run ok = run("check-less-noisy --w " + w + " --v " + fx.symmetric("g.csv", 3, 16.0 / 17.0));
  CHECK(ok.code == 0);
  CHECK(ok.parsed()["certificate"]["kind"] == "vertex_psd");

  for (double d : {0.1, 0.5})
    for (double e : {0.1, 0.5}) {
      const auto ws = fx.symmetric("ws.csv", 3, d);
      const auto es = fx.channel("e.csv", chorder::erasure_channel(3, e).matrix());
      const Run r = run("check-less-noisy --w " + ws + " --v " + es);
      CHECK(r.code == 1);
      const json wit = r.parsed()["witness"];
      CHECK(wit["p"] == json::parse("[0.333333333,0.333333333,0.333333333]"));
      CHECK(wit["q"] == json::parse("[1.0,0.0,0.0]"));
      CHECK(wit["v_divergence"] == "inf");
      CHECK(wit["w_divergence"].is_number());
    }

  // Degraded from W_0.1 through a singular kernel: no witness can exist.
  const chorder::Matrix a{{1, 0, 0}, {0, 0.5, 0.5}, {0, 0.5, 0.5}};
  const auto sv = fx.channel("sv.csv", chorder::symmetric_matrix(3, 0.1) * a);
  const auto w1 = fx.symmetric("w1.csv", 3, 0.1);
  const Run u = run("check-less-noisy --w " + w1 + " --v " + sv + " --samples 1000 --seed 4");
  CHECK(u.code == 3);
  CHECK(u.parsed()["samples_used"] == 1000);
  CHECK(run("check-less-noisy --w " + w1 + " --v " + sv + " --samples 1000 --seed 4").out == u.out);
  CHECK(run("check-less-noisy --w " + w1 + " --v " + sv + " --samples 1000 --seed 4",
            "CHANNEL_ORDER_ISA=scalar").out == u.out);
  CHECK(run("check-less-noisy --w " + w1 + " --v " + fx.symmetric("q4.csv", 4, 0.1)).code == 2);
}

TEST_CASE("delta-star") {
  Fixture fx;
  const Run r = run("delta-star --v " + fx.symmetric("v.csv", 3, 0.2) + " --tol 1e-4");
  REQUIRE(r.code == 0);
  const json j = r.parsed();
  CHECK(j["lower"].get<double>() >= 0.1999);
  CHECK(j["upper"].get<double>() <= 0.2001);
  CHECK(j["lower"].get<double>() <= j["upper"].get<double>());

  const json flat = run("delta-star --v " + fx.symmetric("f.csv", 3, 2.0 / 3.0)).parsed();
  CHECK(flat["lower"].dump() == "0.666666667");
  CHECK(flat["upper"].dump() == "0.666666667");

  const json id = run("delta-star --tol 1e-4 --v " + fx.channel("i.csv", chorder::Matrix::identity(3))).parsed();
  CHECK(id["lower"].get<double>() == 0.0);
  CHECK(id["upper"].get<double>() <= 1e-4);
  CHECK(run("delta-star --v " + fx.path("none.csv")).code == 2);
}

TEST_CASE("region") {
  Fixture fx;
  const auto out = fx.path("r.csv");
  const Run r = run("region --q 3 --delta 0.2 --grid 10 --out " + out + " --seed 3",
                    "CHANNEL_ORDER_THREADS=1");
  REQUIRE(r.code == 0);
  CHECK(r.out.find("points=66") != std::string::npos);
  const std::string first = slurp(out);
  CHECK(first.rfind("v0,v1,v2,label,method\n", 0) == 0);
  CHECK(std::count(first.begin(), first.end(), '\n') == 67);
  const Run again = run("region --q 3 --delta 0.2 --grid 10 --out " + out + " --seed 3",
                        "CHANNEL_ORDER_THREADS=3");
  CHECK(again.out == r.out);
  CHECK(slurp(out) == first);

  CHECK(run("region --q 3 --delta 0.2 --grid 2 --out " + out).out.find("points=6") != std::string::npos);
  CHECK(run("region --q 4 --delta 0.2 --grid 5 --out " + out).code == 2);
  CHECK(run("region --q 3 --delta 0.9 --grid 5 --out " + out).code == 2);
  CHECK(run("region --q 3 --delta 0.2 --grid 1 --out " + out).code == 2);
}

TEST_CASE("constants") {
  const Run r = run("constants --q 3 --delta 0.2");
  REQUIRE(r.code == 0);
  const json j = r.parsed();
  CHECK(j["lsi"].get<double>() == doctest::Approx(0.1442695).epsilon(1e-7));
  CHECK(j["discrete_lsi"].get<double>() == doctest::Approx(0.2452581).epsilon(1e-7));
  CHECK(j["rho_max"].dump() == "0.7");
  CHECK(j["eta_kl_lower"].dump() == "0.49");
  CHECK(j["eta_kl_upper"].dump() == "0.7");
  CHECK(j["eigenvalue"].dump() == "0.7");
  CHECK(j["tau_inverse"].dump() == "-0.285714286");
  CHECK(j["tau_extremal"].dump() == "0.9");
  CHECK(j["gamma_ln"].dump() == "0.941176471");

  const json b = run("constants --q 2 --delta 0.5").parsed();
  CHECK(b["rho_max"].dump() == "0.0");
  CHECK(b["lsi"].dump() == "0.5");
  CHECK(b["tau_inverse"].is_null());
  for (int q : {3, 5, 8}) {
    const json e = run("constants --q " + std::to_string(q) + " --delta 1").parsed();
    CHECK(e["eigenvalue"].get<double>() == doctest::Approx(-1.0 / (q - 1)));
    CHECK(e["gamma_ln"].is_null());
  }
  CHECK(run("constants --q 1 --delta 0.2").code == 2);
  CHECK(run("constants --q 3 --delta 0").code == 2);
}

TEST_CASE("dirichlet-check") {
  Fixture fx;
  const auto a = fx.symmetric("a.csv", 3, 0.2), b = fx.symmetric("b.csv", 3, 0.5);
  CHECK(run("dirichlet-check --kind standard --w " + a + " --v " + b).code == 0);
  CHECK(run("dirichlet-check --kind standard --w " + b + " --v " + a).code == 1);
  CHECK(run("dirichlet-check --kind discrete --w " + a + " --v " + a).code == 0);
  CHECK(run("dirichlet-check --kind standard --w " + a + " --v " +
            fx.write("n.csv", "0.5,0.5,0\n0.5,0.5,0\n0,0,1\n0,0,1\n"))
            .code == 2);
  CHECK(run("dirichlet-check --kind standard --w " + a + " --v " +
            fx.write("ns.csv", "0.9,0.1,0\n0.5,0.5,0\n0,0.4,0.6\n"))
            .code == 2);
  CHECK(run("dirichlet-check --kind bogus --w " + a + " --v " + b).code == 2);
}

TEST_CASE("group-validate") {
  Fixture fx;
  const Run ok = run("group-validate --group " +
                     fx.write("z4.json", R"({"order":4,"table":[[0,1,2,3],[1,2,3,0],[2,3,0,1],[3,0,1,2]]})"));
  CHECK(ok.code == 0);
  CHECK(ok.parsed()["element_orders"] == json::parse("[1,4,2,4]"));
  const Run bad = run("group-validate --group " + fx.write("bad.json", R"({"order":2,"table":[[0,1],[1,1]]})"));
  CHECK(bad.code == 1);
  CHECK(bad.parsed()["error"] == "not-latin-square");
  CHECK(run("group-validate --group " + fx.write("junk.json", "{")).code == 2);
}
