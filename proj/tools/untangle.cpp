// Copyright 2026 The Untangle Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// untangle: sampling, verification and export for the double-tipping
// nullhomotopy of the double-twist, plus a local HTTP backend for the
// explorer.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "untangle/analysis/grid.hpp"
#include "untangle/analysis/probes.hpp"
#include "untangle/cli/checks.hpp"
#include "untangle/cli/documents.hpp"
#include "untangle/cli/http_api.hpp"
#include "untangle/cli/json_text.hpp"
#include "untangle/errors.hpp"

namespace {

using untangle::HomotopyKind;
using untangle::cli::Json;

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

bool write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text << '\n';
    return static_cast<bool>(std::cout);
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "untangle: cannot open '" << path << "' for writing\n";
    return false;
  }
  out << text << '\n';
  out.close();
  if (!out) {
    std::cerr << "untangle: failed writing '" << path << "'\n";
    return false;
  }
  return true;
}

std::string format_angle(double radians, bool degrees) {
  char buf[64];
  if (degrees) {
    std::snprintf(buf, sizeof buf, "%.6g deg", radians * 180.0 / std::numbers::pi);
  } else {
    std::snprintf(buf, sizeof buf, "%.6g rad", radians);
  }
  return buf;
}

bool is_angular_check(const std::string& name) {
  return name == "injective" || name == "surjective" || name == "every-which-way";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Double-tipping nullhomotopy of the double-twist in SO(3)"};
  app.require_subcommand(1);
  // Lets --degrees follow the subcommand.
  app.fallthrough();

  std::string kind_name = "D";
  int ns = 0;
  int nt = 0;
  std::uint64_t seed = 42;
  std::optional<double> tol;
  std::string out_path = "-";
  int port = 8080;
  std::string host = "127.0.0.1";
  bool degrees = false;
  std::string landmark_name;
  double s_value = 0.0;
  bool csv = false;
  std::vector<std::string> checks;

  app.add_flag("--degrees", degrees, "Show angles in degrees in log messages (data stays in radians)");

  const auto add_kind = [&](CLI::App* sub) {
    sub->add_option("--kind", kind_name, "Homotopy: D (double-tipping) or FK")
        ->check(CLI::IsMember({"D", "FK"}));
  };
  const auto add_out = [&](CLI::App* sub) {
    sub->add_option("--out", out_path, "Output file ('-' for stdout)");
  };

  CLI::App* sample_cmd = app.add_subcommand("sample", "Write a MovieGrid of frame poses");
  add_kind(sample_cmd);
  add_out(sample_cmd);
  sample_cmd->add_option("--ns", ns, "Samples in s (>= 2, default 65)")->check(CLI::Range(2, 1 << 20));
  sample_cmd->add_option("--nt", nt, "Samples in t (>= 2, default 65)")->check(CLI::Range(2, 1 << 20));

  CLI::App* frames_cmd = app.add_subcommand("frames", "sample with the 9 x 9 movie defaults");
  add_kind(frames_cmd);
  add_out(frames_cmd);
  frames_cmd->add_option("--ns", ns, "Samples in s (default 9)")->check(CLI::Range(2, 1 << 20));
  frames_cmd->add_option("--nt", nt, "Samples in t (default 9)")->check(CLI::Range(2, 1 << 20));

  CLI::App* verify_cmd = app.add_subcommand("verify", "Run numerical checks; exit 0 iff all pass");
  verify_cmd->add_option("checks", checks,
                         "all | in-p injective surjective degree every-which-way thumb-counts "
                         "candle-once");
  verify_cmd->add_option("--seed", seed, "Seed for sampled targets and pairs");
  verify_cmd->add_option("--tol", tol, "Override the check tolerance (radians)");
  add_kind(verify_cmd);
  add_out(verify_cmd);

  CLI::App* contrail_cmd = app.add_subcommand("contrail", "Path of one landmark at fixed s");
  contrail_cmd->add_option("--landmark", landmark_name, "fingers | thumb | candle")
      ->required()
      ->check(CLI::IsMember({"fingers", "thumb", "candle"}));
  contrail_cmd->add_option("--s", s_value, "Homotopy parameter s in [0, pi/2]")->required();
  contrail_cmd->add_option("--nt", nt, "Samples in t (default 256)")->check(CLI::Range(2, 1 << 20));
  add_out(contrail_cmd);

  CLI::App* hemi_cmd = app.add_subcommand("hemiviews", "x >= 0 and r >= 0 hemisphere views of the lift");
  add_out(hemi_cmd);
  hemi_cmd->add_option("--ns", ns, "Samples in s (default 33)")->check(CLI::Range(2, 1 << 20));
  hemi_cmd->add_option("--nt", nt, "Samples in t (default 65)")->check(CLI::Range(2, 1 << 20));

  CLI::App* phi_cmd = app.add_subcommand("phi-theta", "Axial and rotation angle surfaces of D");
  add_out(phi_cmd);
  phi_cmd->add_option("--ns", ns, "Samples in s (default 65)")->check(CLI::Range(2, 1 << 20));
  phi_cmd->add_option("--nt", nt, "Samples in t (default 65)")->check(CLI::Range(2, 1 << 20));
  phi_cmd->add_flag("--csv", csv, "Write CSV (s,t,phi,theta) instead of JSON");

  CLI::App* compare_cmd = app.add_subcommand("compare", "D and FK movie grids side by side");
  add_out(compare_cmd);
  compare_cmd->add_option("--ns", ns, "Samples in s (default 9)")->check(CLI::Range(2, 1 << 20));
  compare_cmd->add_option("--nt", nt, "Samples in t (default 9)")->check(CLI::Range(2, 1 << 20));

  CLI::App* serve_cmd = app.add_subcommand("serve", "Serve the explorer HTTP interface");
  serve_cmd->add_option("--port", port, "TCP port")->check(CLI::Range(1, 65535));
  serve_cmd->add_option("--host", host, "Bind address (loopback by default)");
  add_kind(serve_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitUsage;
  }

  const auto or_default = [](int value, int fallback) { return value > 0 ? value : fallback; };

  try {
    const HomotopyKind kind = untangle::parse_homotopy_kind(kind_name);

    if (sample_cmd->parsed() || frames_cmd->parsed()) {
      const int fallback = frames_cmd->parsed() ? untangle::cli::kMovieSamples : 65;
      const int grid_ns = or_default(ns, fallback);
      const int grid_nt = or_default(nt, fallback);
      const Json grid = untangle::cli::movie_grid(kind, grid_ns, grid_nt);
      if (!write_output(out_path, untangle::cli::to_json_text(grid))) return kExitFailure;
      std::cerr << "wrote " << grid["poses"].size() << " poses (" << kind_name << ", " << grid_ns
                << " x " << grid_nt << ")\n";
      return 0;
    }

    if (verify_cmd->parsed()) {
      if (checks.empty()) checks.push_back("all");
      for (const std::string& name : checks) {
        if (name != "all" && !untangle::cli::is_check_name(name)) {
          std::cerr << "untangle verify: unknown check '" << name << "'\n";
          return kExitUsage;
        }
      }
      untangle::cli::CheckOptions options;
      options.seed = seed;
      options.kind = kind;
      options.tol = tol;
      const auto reports = untangle::cli::run_checks(checks, options);
      bool all_passed = true;
      for (const auto& r : reports) {
        all_passed = all_passed && r.passed;
        std::cerr << (r.passed ? "PASS " : "FAIL ") << r.check_name << "  metric = "
                  << (is_angular_check(r.check_name) ? format_angle(r.metric, degrees)
                                                     : std::to_string(r.metric))
                  << '\n';
      }
      if (!write_output(out_path, untangle::cli::to_json_text(untangle::cli::reports_doc(reports), 2))) {
        return kExitFailure;
      }
      return all_passed ? 0 : kExitFailure;
    }

    if (contrail_cmd->parsed()) {
      const auto trail = untangle::analysis::contrail(untangle::analysis::parse_landmark(landmark_name),
                                                      s_value, or_default(nt, 256));
      return write_output(out_path, untangle::cli::to_json_text(untangle::cli::contrail_doc(trail)))
                 ? 0
                 : kExitFailure;
    }

    if (hemi_cmd->parsed()) {
      const untangle::analysis::GridSpec grid(or_default(ns, 33), or_default(nt, 65));
      const auto views = untangle::analysis::hemisphere_views(grid);
      return write_output(out_path, untangle::cli::to_json_text(untangle::cli::hemiviews_doc(views)))
                 ? 0
                 : kExitFailure;
    }

    if (phi_cmd->parsed()) {
      const int grid_ns = or_default(ns, 65);
      const int grid_nt = or_default(nt, 65);
      std::string text = csv ? untangle::cli::phi_theta_csv(grid_ns, grid_nt)
                             : untangle::cli::to_json_text(untangle::cli::phi_theta_doc(grid_ns, grid_nt));
      if (csv && !text.empty() && text.back() == '\n') text.pop_back();
      return write_output(out_path, text) ? 0 : kExitFailure;
    }

    if (compare_cmd->parsed()) {
      const Json doc = untangle::cli::compare_grids(or_default(ns, untangle::cli::kMovieSamples),
                                                    or_default(nt, untangle::cli::kMovieSamples));
      return write_output(out_path, untangle::cli::to_json_text(doc)) ? 0 : kExitFailure;
    }

    if (serve_cmd->parsed()) {
      std::cerr << "serving on http://" << host << ':' << port << " (default kind " << kind_name
                << ")\n";
      if (!untangle::cli::serve(host, port, kind)) {
        std::cerr << "untangle serve: cannot bind " << host << ':' << port << '\n';
        return kExitFailure;
      }
      return 0;
    }
  } catch (const untangle::InvalidInput& e) {
    std::cerr << "untangle: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "untangle: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}
