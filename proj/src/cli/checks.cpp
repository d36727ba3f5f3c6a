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

#include "untangle/cli/checks.hpp"

#include <algorithm>

#include "untangle/analysis/grid.hpp"
#include "untangle/analysis/verify.hpp"
#include "untangle/errors.hpp"

namespace untangle::cli {

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names = {
      "in-p", "injective", "surjective", "degree", "every-which-way", "thumb-counts", "candle-once"};
  return names;
}

bool is_check_name(std::string_view name) {
  const auto& names = check_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

analysis::VerificationReport run_check(std::string_view name, const CheckOptions& options) {
  using namespace analysis;
  const auto tol = [&](double fallback) { return options.tol.value_or(fallback); };
  if (name == "in-p") return verify_in_p(options.kind, GridSpec(257, 257));
  if (name == "injective") return verify_injectivity(GridSpec(201, 201, false), tol(1e-4));
  if (name == "surjective") {
    return verify_surjectivity(GridSpec(512, 512), 1000, tol(0.05), options.seed);
  }
  if (name == "degree") return verify_degree(50, GridSpec(512, 512), tol(0.03), 0.05, options.seed);
  if (name == "every-which-way") {
    return verify_every_which_way({HomotopyKind::DoubleTip, HomotopyKind::FK}, 12, tol(1e-3));
  }
  if (name == "thumb-counts") return verify_thumb_counts(4097, tol(0.02));
  if (name == "candle-once") return verify_candle_once(4097, tol(0.02));
  throw InvalidInput("unknown check '" + std::string(name) + "'");
}

std::vector<analysis::VerificationReport> run_checks(std::span<const std::string> names,
                                                     const CheckOptions& options) {
  std::vector<std::string> selected;
  for (const std::string& name : names) {
    if (name != "all" && !is_check_name(name)) {
      throw InvalidInput("unknown check '" + name + "'");
    }
  }
  for (const std::string& known : check_names()) {
    const bool wanted = std::any_of(names.begin(), names.end(), [&](const std::string& n) {
      return n == "all" || n == known;
    });
    if (wanted) selected.push_back(known);
  }
  std::vector<analysis::VerificationReport> reports;
  reports.reserve(selected.size());
  for (const std::string& name : selected) reports.push_back(run_check(name, options));
  return reports;
}

}  // namespace untangle::cli
