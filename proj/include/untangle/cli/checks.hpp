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

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "untangle/analysis/report.hpp"
#include "untangle/nullhomotopy.hpp"

namespace untangle::cli {

// Check names in their fixed output order.
const std::vector<std::string>& check_names();

bool is_check_name(std::string_view name);

struct CheckOptions {
  std::uint64_t seed = 42;
  // Homotopy examined by in-p.
  HomotopyKind kind = HomotopyKind::DoubleTip;
  // Replaces the check's default tolerance when set.
  std::optional<double> tol;
};

// Runs one named check with its pinned parameters:
//   in-p             257 x 257 grid with edges, |J| <= 1e-15
//   injective        201 x 201 interior grid, tol 1e-4 rad
//   surjective       512 x 512 grid, 1000 seeded targets, tol 0.05 rad
//   degree           50 seeded pairs, 512 x 512 grid, tol 0.03, hinge cone 0.05
//   every-which-way  12 x 12 Fibonacci pairs, D and FK, tol 1e-3 rad
//   thumb-counts     4097 samples of t, cone 0.02 rad
//   candle-once      4097 samples of t, cone 0.02 rad
// Throws InvalidInput for an unknown name.
analysis::VerificationReport run_check(std::string_view name, const CheckOptions& options);

// "all" expands to every check; names keep check_names() order.
std::vector<analysis::VerificationReport> run_checks(std::span<const std::string> names,
                                                     const CheckOptions& options);

}  // namespace untangle::cli
