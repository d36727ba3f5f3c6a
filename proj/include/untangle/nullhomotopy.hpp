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

#include <numbers>
#include <optional>
#include <string_view>

#include "untangle/quaternion.hpp"
#include "untangle/rotation.hpp"
#include "untangle/vec3.hpp"

namespace untangle {

inline constexpr double kHalfPi = std::numbers::pi / 2.0;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Which based nullhomotopy of the double-twist about K.
enum class HomotopyKind {
  DoubleTip,  // D: both twist axes tipped symmetrically; stays in P.
  FK,         // K component spills into J by angle s; leaves P.
};

std::string_view to_string(HomotopyKind kind);
// Accepts "D", "DoubleTip", "FK". Throws InvalidInput otherwise.
HomotopyKind parse_homotopy_kind(std::string_view name);

// A point (s, t) of the closed rectangle [0, pi/2] x [0, 2pi]. Values within
// 1e-12 outside an edge are snapped onto it; anything further throws.
class HomotopyParams {
 public:
  HomotopyParams(double s, double t);

  double s() const { return s_; }
  double t() const { return t_; }

 private:
  double s_;
  double t_;
};

// One evaluated cell of a nullhomotopy.
struct HomotopySample {
  HomotopyParams params;
  UnitQuaternion q;
  RotationMatrix matrix;
  AxisAngle axis_angle;
  // Axial angle in the x-z plane; only for DoubleTip and only where the
  // rotation is not the identity.
  std::optional<double> phi;
  // 2 acos(r), in [0, 2pi].
  double theta = 0.0;
};

// Unit-quaternion lift of D:
//   (1 - 2cos^2 s sin^2(t/2)) + I sin(2s) sin^2(t/2) + K cos s sin t.
UnitQuaternion dhat(double s, double t);

// D(s, t) = R(dhat(s, t)).
RotationMatrix d_rotation(double s, double t);

// Same real and I parts as dhat; the K part is rotated by s toward J.
UnitQuaternion fk_hat(double s, double t);

UnitQuaternion homotopy_lift(HomotopyKind kind, double s, double t);

// Axial angle of D(s, t): atan2 of the K and I components of dhat, so the
// axis is (cos phi, 0, sin phi). Throws UndefinedAxis within 1e-9 rad of
// the identity.
double phi(double s, double t);

// Rotation angle 2 acos(r) of dhat(s, t), in [0, 2pi].
double theta(double s, double t);

HomotopySample sample(HomotopyKind kind, double s, double t);

// from_axis_angle(axis, t) for t in [0, 2pi].
UnitQuaternion single_twist(const Vec3& axis, double t);

// Single twist about (0, -sin s, cos s), s in [0, pi]. Tips the z axis
// through -y until it is upside down.
UnitQuaternion tipped_single_twist(double s, double t);

// The two tipped twists whose pointwise product is dhat. `first` (axis
// tipped toward -y) is applied first, so dhat = second * first.
struct TipFactors {
  UnitQuaternion first;
  UnitQuaternion second;

  UnitQuaternion product() const { return qmul(second, first); }
};

TipFactors double_tip_factors(double s, double t);

// Worst rotation_distance over n samples of t between the concatenation of
// twist(first) then twist(second), reparametrized to [0, 2pi], and the
// pointwise product twist(first)(t) * twist(second)(t).
double concat_product_gap(const Vec3& first_axis, const Vec3& second_axis, int n);

// True iff concatenating a single twist with itself agrees with the
// pointwise square within 1e-9 at n samples.
bool concat_vs_product_check(const Vec3& axis, int n);

}  // namespace untangle
