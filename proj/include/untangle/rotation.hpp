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

#include "untangle/quaternion.hpp"
#include "untangle/vec3.hpp"

namespace untangle {

// A 3x3 matrix in SO(3), stored row-major. Construction checks
// max|M^T M - I| <= 1e-9 and |det M - 1| <= 1e-9.
class RotationMatrix {
 public:
  RotationMatrix() = default;

  // Throws InvalidInput when the entries are not a rotation.
  explicit RotationMatrix(const std::array<double, 9>& row_major);

  static RotationMatrix identity() { return RotationMatrix{}; }

  double operator()(int row, int col) const { return m_[static_cast<std::size_t>(3 * row + col)]; }
  const std::array<double, 9>& row_major() const { return m_; }

  Vec3 column(int col) const { return {(*this)(0, col), (*this)(1, col), (*this)(2, col)}; }

  Vec3 operator*(const Vec3& v) const;
  RotationMatrix operator*(const RotationMatrix& o) const;
  RotationMatrix transpose() const;

  double determinant() const;

  // Largest absolute entry-wise difference.
  double max_abs_diff(const RotationMatrix& o) const;

 private:
  struct Unchecked {};
  RotationMatrix(const std::array<double, 9>& m, Unchecked) : m_(m) {}

  std::array<double, 9> m_{1, 0, 0, 0, 1, 0, 0, 0, 1};

  friend RotationMatrix to_matrix(const UnitQuaternion& q);
};

// Canonical axis-angle: angle in [0, pi]. When the rotation is the identity
// the axis is the placeholder (0,0,1) and axis_defined is false.
struct AxisAngle {
  Vec3 axis = kE3;
  double angle = 0.0;
  bool axis_defined = false;
};

// Ball model point: rho * u stands for rotation by rho*pi about u.
struct BallPoint {
  double rho = 0.0;
  Vec3 u = kE3;

  // Boundary points (rho == 1) are equal to their antipodes; the centre is
  // equal regardless of u.
  bool equivalent(const BallPoint& o, double tol = kUnitTolerance) const;
  bool operator==(const BallPoint& o) const { return equivalent(o); }
};

// Imaginary part of q (0,v) conj(q).
Vec3 rotate(const UnitQuaternion& q, const Vec3& v);

// cos(gamma/2) + sin(gamma/2) u. Throws InvalidInput for a non-unit axis.
UnitQuaternion from_axis_angle(const Vec3& axis, double gamma);

// Angle in [0, pi]; near zero the axis is the (0, 0, 1) placeholder with
// axis_defined false. Half turns report the axis with its first clear
// component positive.
AxisAngle to_axis_angle(const UnitQuaternion& q);

// Columns are rotate(q, e1), rotate(q, e2), rotate(q, e3).
RotationMatrix to_matrix(const UnitQuaternion& q);

BallPoint to_ball_point(const UnitQuaternion& q);

// Angle in [0, pi] of the rotation a^-1 b, blind to the sign of either lift.
double rotation_distance(const UnitQuaternion& a, const UnitQuaternion& b);

bool same_rotation(const UnitQuaternion& a, const UnitQuaternion& b, double tol);

// Rotation angle in [0, pi] of q as an element of SO(3).
inline double rotation_angle(const UnitQuaternion& q) {
  return rotation_distance(UnitQuaternion::identity(), q);
}

}  // namespace untangle
