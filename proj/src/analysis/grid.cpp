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

#include "untangle/analysis/grid.hpp"

#include <string>

#include "untangle/errors.hpp"
#include "untangle/nullhomotopy.hpp"

namespace untangle::analysis {

GridSpec::GridSpec(int ns, int nt, bool include_edges, std::int64_t cell_cap)
    : ns_(ns), nt_(nt), include_edges_(include_edges) {
  if (ns < 2 || nt < 2) {
    throw InvalidInput("grid needs ns, nt >= 2 (got " + std::to_string(ns) + " x " +
                       std::to_string(nt) + ")");
  }
  if (cells() > cell_cap) {
    throw InvalidInput("grid of " + std::to_string(cells()) + " cells exceeds the cap of " +
                       std::to_string(cell_cap));
  }
}

double GridSpec::s(int i) const {
  if (include_edges_) return i == ns_ - 1 ? kHalfPi : kHalfPi * i / (ns_ - 1);
  return kHalfPi * (i + 1) / (ns_ + 1);
}

double GridSpec::t(int j) const {
  if (include_edges_) return j == nt_ - 1 ? kTwoPi : kTwoPi * j / (nt_ - 1);
  return kTwoPi * (j + 1) / (nt_ + 1);
}

}  // namespace untangle::analysis
