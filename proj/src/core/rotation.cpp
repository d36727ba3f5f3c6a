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

#include "untangle/rotation.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "untangle/errors.hpp"

namespace untangle {
namespace {

// Below this imaginary-part magnitude the rotation is treated as the
// identity and its axis as undefined.
constexpr double kAxisEpsilon = 1e-12;
constexpr double kHalfTurnEpsilon = 1e-12;

}  // namespace

RotationMatrix::RotationMatrix(const std::array<double, 9>& row_major) : m_(row_major) {
  const RotationMatrix product = transpose() * *this;
  const double orth = product.max_abs_diff(RotationMatrix{});
  const double det = determinant();
  if (!(orth <= kUnitTolerance) || !(std::fabs(det - 1.0) <= kUnitTolerance)) {
    throw InvalidInput("matrix is not in SO(3): max|MtM - I| = " + std::to_string(orth) +
                       ", det = " + std::to_string(det));
  }
}

Vec3 RotationMatrix::operator*(const Vec3& v) const {
  return {m_[0] * v.x + m_[1] * v.y + m_[2] * v.z,
          m_[3] * v.x + m_[4] * v.y + m_[5] * v.z,
          m_[6] * v.x + m_[7] * v.y + m_[8] * v.z};
}

RotationMatrix RotationMatrix::operator*(const RotationMatrix& o) const {
  std::array<double, 9> out{};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      double acc = 0.0;
      for (int k = 0; k < 3; ++k) acc += (*this)(i, k) * o(k, j);
      out[static_cast<std::size_t>(3 * i + j)] = acc;
    }
  }
  return RotationMatrix(out, Unchecked{});
}

RotationMatrix RotationMatrix::transpose() const {
  return RotationMatrix({m_[0], m_[3], m_[6], m_[1], m_[4], m_[7], m_[2], m_[5], m_[8]},
                        Unchecked{});
}

double RotationMatrix::determinant() const {
  return m_[0] * (m_[4] * m_[8] - m_[5] * m_[7]) - m_[1] * (m_[3] * m_[8] - m_[5] * m_[6]) +
         m_[2] * (m_[3] * m_[7] - m_[4] * m_[6]);
}

double RotationMatrix::max_abs_diff(const RotationMatrix& o) const {
  double worst = 0.0;
  for (std::size_t i = 0; i < 9; ++i) worst = std::fmax(worst, std::fabs(m_[i] - o.m_[i]));
  return worst;
}

bool BallPoint::equivalent(const BallPoint& o, double tol) const {
  if (std::fabs(rho - o.rho) > tol) return false;
  if (rho <= tol && o.rho <= tol) return true;
  if (untangle::max_abs_diff(u, o.u) <= tol) return true;
  return rho >= 1.0 - tol && o.rho >= 1.0 - tol && untangle::max_abs_diff(u, -o.u) <= tol;
}

Vec3 rotate(const UnitQuaternion& q, const Vec3& v) {
  const Quaternion& p = q.quat();
  return qmul(qmul(p, Quaternion::pure(v)), conj(p)).imag();
}

UnitQuaternion from_axis_angle(const Vec3& axis, double gamma) {
  const double n = norm(axis);
  if (!(std::fabs(n - 1.0) <= kUnitTolerance)) {
    throw InvalidInput("rotation axis is not unit: norm = " + std::to_string(n));
  }
  if (!std::isfinite(gamma)) throw InvalidInput("rotation angle is not finite");
  const double reduced = std::fmod(gamma, 4.0 * std::numbers::pi);
  const Vec3 u = axis / n;
  const double s = std::sin(0.5 * reduced);
  return UnitQuaternion(Quaternion{std::cos(0.5 * reduced), s * u.x, s * u.y, s * u.z});
}

AxisAngle to_axis_angle(const UnitQuaternion& q) {
  // Work with the lift having r >= 0 so the angle lands in [0, pi]; this is
  // the (-u, 2pi - gamma) flip.
  Quaternion p = q.r() < 0.0 ? -q.quat() : q.quat();
  // Half turns are the same about u and -u; rounding in r must not pick the
  // sign, so take the axis whose first clear component is positive.
  if (p.r <= kHalfTurnEpsilon) {
    for (const double c : {p.x, p.y, p.z}) {
      if (std::fabs(c) > kHalfTurnEpsilon) {
        if (c < 0.0) p = -p;
        break;
      }
    }
    p.r = std::fabs(p.r);
  }
  const Vec3 im = p.imag();
  const double s = norm(im);
  if (s <= kAxisEpsilon) return AxisAngle{};
  return AxisAngle{im / s, 2.0 * std::atan2(s, p.r), true};
}

RotationMatrix to_matrix(const UnitQuaternion& q) {
  const auto [r, x, y, z] = q.quat();
  // Homogeneous form: exact rotation for any nonzero q.
  const double n2 = r * r + x * x + y * y + z * z;
  const double k = 1.0 / n2;
  return RotationMatrix({k * (r * r + x * x - y * y - z * z), 2 * k * (x * y - r * z),
                         2 * k * (x * z + r * y), 2 * k * (x * y + r * z),
                         k * (r * r - x * x + y * y - z * z), 2 * k * (y * z - r * x),
                         2 * k * (x * z - r * y), 2 * k * (y * z + r * x),
                         k * (r * r - x * x - y * y + z * z)},
                        RotationMatrix::Unchecked{});
}

BallPoint to_ball_point(const UnitQuaternion& q) {
  const AxisAngle aa = to_axis_angle(q);
  return BallPoint{aa.angle / std::numbers::pi, aa.axis};
}

double rotation_distance(const UnitQuaternion& a, const UnitQuaternion& b) {
  // Equals 2 acos(min(1, |<a,b>|)), evaluated as four times the half-angle
  // between a and the nearer of +-b; acos loses all precision near 1.
  const Quaternion& p = a.quat();
  const Quaternion c = dot4(p, b.quat()) < 0.0 ? -b.quat() : b.quat();
  return 4.0 * std::atan2(norm(p - c), norm(p + c));
}

bool same_rotation(const UnitQuaternion& a, const UnitQuaternion& b, double tol) {
  return rotation_distance(a, b) <= tol;
}

}  // namespace untangle
