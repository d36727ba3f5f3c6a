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

namespace untangle::analysis {

// Sample layout over the homotopy rectangle [0, pi/2] x [0, 2pi].
//
// With edges, s_i = (pi/2) i / (ns - 1) and t_j = 2pi j / (nt - 1), both
// ends included exactly. Without edges the samples are the ns (resp. nt)
// interior points of a uniform subdivision into ns + 1 (nt + 1) pieces.
class GridSpec {
 public:
  static constexpr std::int64_t kDefaultCellCap = 16'777'216;

  // Throws InvalidInput for ns or nt below 2 or ns * nt above cell_cap.
  GridSpec(int ns, int nt, bool include_edges = true, std::int64_t cell_cap = kDefaultCellCap);

  int ns() const { return ns_; }
  int nt() const { return nt_; }
  bool include_edges() const { return include_edges_; }
  std::int64_t cells() const { return static_cast<std::int64_t>(ns_) * nt_; }

  double s(int i) const;
  double t(int j) const;

  // Row-major over s: index = i * nt + j.
  std::int64_t index(int i, int j) const { return static_cast<std::int64_t>(i) * nt_ + j; }

 private:
  int ns_;
  int nt_;
  bool include_edges_;
};

}  // namespace untangle::analysis
