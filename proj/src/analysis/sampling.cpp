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

#include "untangle/analysis/sampling.hpp"

#include <cmath>
#include <numbers>

namespace untangle::analysis {

double SeededRng::uniform_open(double lo, double hi) {
  double u = uniform();
  while (u == 0.0) u = uniform();
  return lo + (hi - lo) * u;
}

Vec3 SeededRng::unit_vector() {
  const double z = uniform(-1.0, 1.0);
  const double lon = uniform(0.0, 2.0 * std::numbers::pi);
  const double rho = std::sqrt(std::fmax(0.0, 1.0 - z * z));
  return {rho * std::cos(lon), rho * std::sin(lon), z};
}

std::vector<Vec3> fibonacci_sphere(int n) {
  std::vector<Vec3> out;
  out.reserve(static_cast<std::size_t>(n));
  const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
  for (int i = 0; i < n; ++i) {
    const double z = 1.0 - (2.0 * i + 1.0) / n;
    const double rho = std::sqrt(std::fmax(0.0, 1.0 - z * z));
    const double lon = golden * i;
    out.push_back({rho * std::cos(lon), rho * std::sin(lon), z});
  }
  return out;
}

}  // namespace untangle::analysis
