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

#include "untangle/nullhomotopy.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "untangle/errors.hpp"

namespace untangle {
namespace {

constexpr double kEdgeSnap = 1e-12;

// Snaps v onto [lo, hi] if it is within kEdgeSnap; throws otherwise.
double snap_to_range(double v, double lo, double hi, const char* name) {
  if (!std::isfinite(v) || v < lo - kEdgeSnap || v > hi + kEdgeSnap) {
    throw InvalidInput(std::string(name) + " = " + std::to_string(v) + " outside [" +
                       std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
  return std::clamp(v, lo, hi);
}

// sin(0.5e-9): imaginary-part size of a rotation by 1e-9 rad.
constexpr double kIdentityImagBound = 5e-10;

}  // namespace

std::string_view to_string(HomotopyKind kind) {
  switch (kind) {
    case HomotopyKind::DoubleTip:
      return "D";
    case HomotopyKind::FK:
      return "FK";
  }
  return "?";
}

HomotopyKind parse_homotopy_kind(std::string_view name) {
  if (name == "D" || name == "DoubleTip") return HomotopyKind::DoubleTip;
  if (name == "FK") return HomotopyKind::FK;
  throw InvalidInput("unknown homotopy kind '" + std::string(name) + "' (expected D or FK)");
}

HomotopyParams::HomotopyParams(double s, double t)
    : s_(snap_to_range(s, 0.0, kHalfPi, "s")), t_(snap_to_range(t, 0.0, kTwoPi, "t")) {}

UnitQuaternion dhat(double s, double t) {
  const HomotopyParams p(s, t);
  const double cs = std::cos(p.s());
  const double half_sin = std::sin(0.5 * p.t());
  const double sin2 = half_sin * half_sin;
  return UnitQuaternion(Quaternion
      {1.0 - 2.0 * cs * cs * sin2, std::sin(2.0 * p.s()) * sin2, 0.0, cs * std::sin(p.t())});
}

RotationMatrix d_rotation(double s, double t) { return to_matrix(dhat(s, t)); }

UnitQuaternion fk_hat(double s, double t) {
  const HomotopyParams p(s, t);
  const double cs = std::cos(p.s());
  const double ss = std::sin(p.s());
  const double half_sin = std::sin(0.5 * p.t());
  const double sin2 = half_sin * half_sin;
  const double st = std::sin(p.t());
  return UnitQuaternion(Quaternion
      {1.0 - 2.0 * cs * cs * sin2, std::sin(2.0 * p.s()) * sin2, ss * cs * st, cs * cs * st});
}

UnitQuaternion homotopy_lift(HomotopyKind kind, double s, double t) {
  return kind == HomotopyKind::DoubleTip ? dhat(s, t) : fk_hat(s, t);
}

double phi(double s, double t) {
  const UnitQuaternion q = dhat(s, t);
  if (std::hypot(q.x(), q.z()) <= kIdentityImagBound) {
    throw UndefinedAxis("D(" + std::to_string(s) + ", " + std::to_string(t) +
                        ") is the identity; its axis is undefined");
  }
  // x >= 0 always, so the result lies in [-pi/2, pi/2]; -pi/2 occurs only
  // on the s = 0 edge for t in (pi, 2pi).
  return std::atan2(q.z(), q.x());
}

double theta(double s, double t) {
  return 2.0 * std::acos(std::clamp(dhat(s, t).r(), -1.0, 1.0));
}

HomotopySample sample(HomotopyKind kind, double s, double t) {
  const HomotopyParams params(s, t);
  const UnitQuaternion q = homotopy_lift(kind, params.s(), params.t());
  std::optional<double> axial;
  if (kind == HomotopyKind::DoubleTip && std::hypot(q.x(), q.z()) > kIdentityImagBound) {
    axial = std::atan2(q.z(), q.x());
  }
  return HomotopySample{params,
                        q,
                        to_matrix(q),
                        to_axis_angle(q),
                        axial,
                        2.0 * std::acos(std::clamp(q.r(), -1.0, 1.0))};
}

UnitQuaternion single_twist(const Vec3& axis, double t) {
  return from_axis_angle(axis, snap_to_range(t, 0.0, kTwoPi, "t"));
}

UnitQuaternion tipped_single_twist(double s, double t) {
  const double tip = snap_to_range(s, 0.0, std::numbers::pi, "s");
  return single_twist({0.0, -std::sin(tip), std::cos(tip)}, t);
}

TipFactors double_tip_factors(double s, double t) {
  const HomotopyParams p(s, t);
  const double ss = std::sin(p.s());
  const double cs = std::cos(p.s());
  return TipFactors{single_twist({0.0, -ss, cs}, p.t()), single_twist({0.0, ss, cs}, p.t())};
}

double concat_product_gap(const Vec3& first_axis, const Vec3& second_axis, int n) {
  if (n < 2) throw InvalidInput("need at least 2 samples, got " + std::to_string(n));
  double worst = 0.0;
  for (int i = 0; i < n; ++i) {
    const double t = kTwoPi * i / (n - 1);
    const UnitQuaternion concatenated = t <= std::numbers::pi
                                            ? single_twist(first_axis, 2.0 * t)
                                            : single_twist(second_axis, 2.0 * t - kTwoPi);
    const UnitQuaternion product = qmul(single_twist(second_axis, t), single_twist(first_axis, t));
    worst = std::fmax(worst, rotation_distance(concatenated, product));
  }
  return worst;
}

bool concat_vs_product_check(const Vec3& axis, int n) {
  return concat_product_gap(axis, axis, n) <= 1e-9;
}

}  // namespace untangle
