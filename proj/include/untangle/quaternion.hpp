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

#include "untangle/vec3.hpp"

namespace untangle {

// Construction tolerance for unit-length objects (unit quaternions, axes).
inline constexpr double kUnitTolerance = 1e-9;

// r + xI + yJ + zK.
struct Quaternion {
  double r = 0.0;
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  constexpr bool operator==(const Quaternion&) const = default;

  constexpr Quaternion operator+(const Quaternion& o) const {
    return {r + o.r, x + o.x, y + o.y, z + o.z};
  }
  constexpr Quaternion operator-(const Quaternion& o) const {
    return {r - o.r, x - o.x, y - o.y, z - o.z};
  }
  constexpr Quaternion operator-() const { return {-r, -x, -y, -z}; }
  constexpr Quaternion operator*(double k) const { return {r * k, x * k, y * k, z * k}; }

  constexpr Vec3 imag() const { return {x, y, z}; }
  constexpr std::array<double, 4> to_array() const { return {r, x, y, z}; }

  static constexpr Quaternion real(double value) { return {value, 0.0, 0.0, 0.0}; }
  static constexpr Quaternion pure(const Vec3& v) { return {0.0, v.x, v.y, v.z}; }
};

inline constexpr Quaternion kQuatOne{1.0, 0.0, 0.0, 0.0};
inline constexpr Quaternion kQuatI{0.0, 1.0, 0.0, 0.0};
inline constexpr Quaternion kQuatJ{0.0, 0.0, 1.0, 0.0};
inline constexpr Quaternion kQuatK{0.0, 0.0, 0.0, 1.0};

// Hamilton product: I^2 = J^2 = K^2 = IJK = -1.
constexpr Quaternion qmul(const Quaternion& a, const Quaternion& b) {
  return {a.r * b.r - a.x * b.x - a.y * b.y - a.z * b.z,
          a.r * b.x + a.x * b.r + a.y * b.z - a.z * b.y,
          a.r * b.y - a.x * b.z + a.y * b.r + a.z * b.x,
          a.r * b.z + a.x * b.y - a.y * b.x + a.z * b.r};
}

constexpr Quaternion operator*(const Quaternion& a, const Quaternion& b) { return qmul(a, b); }

constexpr Quaternion conj(const Quaternion& q) { return {q.r, -q.x, -q.y, -q.z}; }

// Euclidean inner product on R^4.
constexpr double dot4(const Quaternion& a, const Quaternion& b) {
  return a.r * b.r + a.x * b.x + a.y * b.y + a.z * b.z;
}

inline double norm(const Quaternion& q) { return std::sqrt(dot4(q, q)); }

// A point of S^3. The invariant |norm - 1| <= kUnitTolerance is checked on
// construction; arithmetic that drifts can be pulled back with renormalized().
class UnitQuaternion {
 public:
  UnitQuaternion() = default;

  // Throws InvalidInput if q is not unit within kUnitTolerance.
  explicit UnitQuaternion(const Quaternion& q);
  UnitQuaternion(double r, double x, double y, double z)
      : UnitQuaternion(Quaternion{r, x, y, z}) {}

  // Scales any nonzero quaternion onto S^3. Throws InvalidInput for zero.
  static UnitQuaternion normalize(const Quaternion& q);

  static UnitQuaternion identity() { return UnitQuaternion{}; }

  const Quaternion& quat() const { return q_; }
  double r() const { return q_.r; }
  double x() const { return q_.x; }
  double y() const { return q_.y; }
  double z() const { return q_.z; }
  Vec3 imag() const { return q_.imag(); }

  UnitQuaternion renormalized() const { return normalize(q_); }

  // Group inverse.
  UnitQuaternion inverse() const { return UnitQuaternion(conj(q_), Unchecked{}); }
  UnitQuaternion operator-() const { return UnitQuaternion(-q_, Unchecked{}); }

  bool operator==(const UnitQuaternion& o) const { return q_ == o.q_; }

  operator const Quaternion&() const { return q_; }  // NOLINT(google-explicit-constructor)

 private:
  struct Unchecked {};
  UnitQuaternion(const Quaternion& q, Unchecked) : q_(q) {}

  Quaternion q_ = kQuatOne;

  friend UnitQuaternion qmul(const UnitQuaternion& a, const UnitQuaternion& b);
};

// Product of unit quaternions; stays on S^3 up to rounding.
UnitQuaternion qmul(const UnitQuaternion& a, const UnitQuaternion& b);

inline UnitQuaternion operator*(const UnitQuaternion& a, const UnitQuaternion& b) {
  return qmul(a, b);
}

}  // namespace untangle
