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

// channel_order: command-line front end for the channel preorder library.
//
// Exit codes: 0 dominates / true / valid, 1 fails / false / invalid,
// 2 input or parameter error, 3 undetermined (sampled tests only).

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "chorder/dirichlet.h"
#include "chorder/divergences.h"
#include "chorder/error.h"
#include "chorder/io.h"
#include "chorder/kernels.h"
#include "chorder/preorders.h"
#include "chorder/symdom.h"

namespace {

using namespace chorder;
using nlohmann::json;

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitInput = 2;
constexpr int kExitUndetermined = 3;

int verdict_exit(const DominationVerdict& v) {
  switch (v.status) {
    case Status::kDominates: return kExitYes;
    case Status::kFails: return kExitNo;
    case Status::kUndetermined: return kExitUndetermined;
  }
  return kExitInput;
}

void print(const json& j) { std::cout << j.dump(2) << '\n'; }

std::size_t worker_count() {
  if (const char* env = std::getenv("CHANNEL_ORDER_THREADS")) {
    char* end = nullptr;
    const unsigned long n = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && n > 0) return n;
    fail(Errc::kParameter, "CHANNEL_ORDER_THREADS must be a positive integer");
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

void apply_isa_override() {
  const char* env = std::getenv("CHANNEL_ORDER_ISA");
  if (env == nullptr) return;
  const std::string isa = env;
  if (isa == "scalar") {
    kernels::set_isa(kernels::Isa::kScalar);
  } else if (isa == "avx2") {
    if (!kernels::set_isa(kernels::Isa::kAvx2)) fail(Errc::kParameter, "AVX2 is not available");
  } else if (isa == "neon") {
    if (!kernels::set_isa(kernels::Isa::kNeon)) fail(Errc::kParameter, "NEON is not available");
  } else if (isa != "auto") {
    fail(Errc::kParameter, "CHANNEL_ORDER_ISA must be scalar, avx2, neon or auto");
  }
}

bool is_group_error(Errc c) {
  switch (c) {
    case Errc::kInvalidOrder:
    case Errc::kNotLatinSquare:
    case Errc::kWrongIdentity:
    case Errc::kMissingInverse:
    case Errc::kNonCommutative:
    case Errc::kNonAssociative:
    case Errc::kOutOfRange:
      return true;
    default:
      return false;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decide degradation and less-noisy domination between channels"};
  app.require_subcommand(1);

  std::string w_path, v_path, group_path, out_path, kind = "discrete";
  bool additive = false;
  std::size_t samples = 2000, grid = 60, q = 3, budget = 2000;
  std::uint64_t seed = 0;
  double tol = 1e-6, delta = 0.2;
  std::optional<double> kind_delta;

  auto* deg = app.add_subcommand("check-degraded", "Is V a degraded version of W?");
  deg->add_option("--w", w_path, "Channel (or noise pmf with --additive)")->required();
  deg->add_option("--v", v_path, "Channel (or noise pmf with --additive)")->required();
  deg->add_flag("--additive", additive, "Inputs are noise pmfs of additive channels");
  deg->add_option("--group", group_path, "Cayley table (default: cyclic group)");

  auto* ln = app.add_subcommand("check-less-noisy", "Is W less noisy than V?");
  ln->add_option("--w", w_path)->required();
  ln->add_option("--v", v_path)->required();
  ln->add_option("--samples", samples, "Sampled-test budget");
  ln->add_option("--seed", seed);

  auto* ds = app.add_subcommand("delta-star", "Largest delta with W_delta less noisy than V");
  ds->add_option("--v", v_path)->required();
  ds->add_option("--tol", tol)->check(CLI::PositiveNumber);
  ds->add_option("--samples", samples);
  ds->add_option("--seed", seed);

  auto* region = app.add_subcommand("region", "Classify the ternary noise simplex");
  region->add_option("--q", q);
  region->add_option("--delta", delta)->required();
  region->add_option("--grid", grid)->required();
  region->add_option("--out", out_path)->required();
  region->add_option("--seed", seed);
  region->add_option("--budget", budget, "Sampled-test budget for singular circulants");

  auto* consts = app.add_subcommand("constants", "Closed-form constants of W_delta");
  consts->add_option("--q", q)->required();
  consts->add_option("--delta", delta)->required();

  auto* dir = app.add_subcommand("dirichlet-check", "Dirichlet form domination");
  dir->add_option("--w", w_path)->required();
  dir->add_option("--v", v_path)->required();
  dir->add_option("--kind", kind)->check(CLI::IsMember({"discrete", "continuous", "standard"}));
  dir->add_option("--delta", kind_delta, "delta of W for --kind standard (default: inferred)");

  auto* gv = app.add_subcommand("group-validate", "Validate a Cayley table");
  gv->add_option("--group", group_path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    apply_isa_override();

    if (*deg) {
      if (additive) {
        const Pmf w = load_pmf(w_path), v = load_pmf(v_path);
        const FiniteAbelianGroup g =
            group_path.empty() ? cyclic_group(w.size()) : load_group(group_path);
        const DominationVerdict r = is_degraded_additive(g, w, v);
        print(to_json(r));
        return verdict_exit(r);
      }
      const DominationVerdict r = is_degraded(load_channel(w_path), load_channel(v_path));
      print(to_json(r));
      return verdict_exit(r);
    }

    if (*ln) {
      const DominationVerdict r =
          less_noisy(load_channel(w_path), load_channel(v_path), samples, seed);
      print(to_json(r));
      return verdict_exit(r);
    }

    if (*ds) {
      print(to_json(delta_star(load_channel(v_path), tol, samples, seed)));
      return kExitYes;
    }

    if (*region) {
      ClassifyOptions opts;
      opts.seed = seed;
      opts.sampled_budget = budget;
      const auto points = region_sample(q, delta, grid, opts, worker_count());
      std::ofstream out(out_path, std::ios::binary);
      if (!out) fail(Errc::kParse, "cannot write " + out_path);
      write_region_csv(out, points);
      out.close();
      if (!out) fail(Errc::kParse, "failed writing " + out_path);
      std::cout << "points=" << points.size();
      for (const auto& [label, n] : region_counts(points))
        std::cout << ' ' << region_label_name(label) << '=' << n;
      std::cout << '\n';
      return kExitYes;
    }

    if (*consts) {
      if (q < 2) fail(Errc::kParameter, "q must be at least 2");
      if (!(delta > 0.0 && delta <= 1.0)) fail(Errc::kParameter, "delta must lie in (0, 1]");
      const Channel w = symmetric_channel(q, delta);
      const double rho = maximal_correlation(Pmf::uniform(q), w);
      const double top = static_cast<double>(q - 1) / static_cast<double>(q);
      json j;
      j["lsi"] = to_json(lsi_constant_symmetric(q, delta));
      j["discrete_lsi"] = to_json(discrete_lsi_constant_symmetric(q, delta));
      j["rho_max"] = to_json(rho);
      j["eta_kl_lower"] = to_json(rho * rho);
      j["eta_kl_upper"] = to_json(eta_tv(w));
      j["eigenvalue"] = to_json(symmetric_eigenvalue(q, delta));
      try {
        j["tau_inverse"] = to_json(symmetric_inverse_param(q, delta));
      } catch (const Error& e) {
        if (e.code() != Errc::kSingular) throw;
        j["tau_inverse"] = nullptr;  // W_delta is not invertible
      }
      j["tau_extremal"] = to_json(extremal_degraded_tau(q, delta));
      j["gamma_ln"] = delta <= top ? to_json(ln_gamma_bound(q, delta)) : json(nullptr);
      print(j);
      return kExitYes;
    }

    if (*dir) {
      const bool ok = dirichlet_domination_check(load_channel(w_path), load_channel(v_path),
                                                 parse_dirichlet_kind(kind), kind_delta);
      print(json{{"kind", kind}, {"dominates", ok}});
      return ok ? kExitYes : kExitNo;
    }

    if (*gv) {
      try {
        const FiniteAbelianGroup g = load_group(group_path);
        json orders = json::array();
        for (std::size_t x = 0; x < g.order(); ++x) orders.push_back(element_order(g, x));
        print(json{{"valid", true}, {"order", g.order()}, {"element_orders", orders}});
        return kExitYes;
      } catch (const Error& e) {
        if (!is_group_error(e.code())) throw;
        print(json{{"valid", false}, {"error", errc_name(e.code())}, {"message", e.what()}});
        return kExitNo;
      }
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}
