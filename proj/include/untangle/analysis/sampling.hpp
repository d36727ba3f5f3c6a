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
#include <random>
#include <vector>

#include "untangle/vec3.hpp"

namespace untangle::analysis {

// Deterministic source for every "random" sample in the analysis code.
// mt19937_64 output is fixed by the standard; the conversion to doubles is
// done here rather than by std::uniform_real_distribution, whose algorithm
// is implementation-defined.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [0, 1).
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  // Uniform in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Uniform in the open interval (lo, hi).
  double uniform_open(double lo, double hi);

  // Uniform on S^2 (Archimedes: uniform z and longitude).
  Vec3 unit_vector();

 private:
  std::mt19937_64 engine_;
};

// n nearly evenly spread points on S^2 (golden-angle spiral).
std::vector<Vec3> fibonacci_sphere(int n);

}  // namespace untangle::analysis
