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

#include <array>
#include <cmath>

namespace untangle {

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  constexpr bool operator==(const Vec3&) const = default;

  constexpr Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  constexpr Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  constexpr Vec3 operator-() const { return {-x, -y, -z}; }
  constexpr Vec3 operator*(double k) const { return {x * k, y * k, z * k}; }
  constexpr Vec3 operator/(double k) const { return {x / k, y / k, z / k}; }

  constexpr std::array<double, 3> to_array() const { return {x, y, z}; }
};

constexpr Vec3 operator*(double k, const Vec3& v) { return v * k; }

constexpr double dot(const Vec3& a, const Vec3& b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}

constexpr Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

inline double norm(const Vec3& v) { return std::sqrt(dot(v, v)); }

inline Vec3 normalized(const Vec3& v) { return v / norm(v); }

inline constexpr Vec3 kE1{1.0, 0.0, 0.0};
inline constexpr Vec3 kE2{0.0, 1.0, 0.0};
inline constexpr Vec3 kE3{0.0, 0.0, 1.0};

// Great-circle angle between two directions, in [0, pi]. Uses the
// atan2(|a x b|, a . b) form, which stays accurate near 0 and pi.
inline double angle_between(const Vec3& a, const Vec3& b) {
  return std::atan2(norm(cross(a, b)), dot(a, b));
}

// Largest absolute component difference.
inline double max_abs_diff(const Vec3& a, const Vec3& b) {
  return std::fmax(std::fabs(a.x - b.x),
                   std::fmax(std::fabs(a.y - b.y), std::fabs(a.z - b.z)));
}

}  // namespace untangle
