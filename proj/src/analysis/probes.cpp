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

#include "untangle/analysis/probes.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "untangle/errors.hpp"
#include "untangle/rotation.hpp"

namespace untangle::analysis {

Vec3 evaluate(const Vec3& v, HomotopyKind kind, double s, double t) {
  return rotate(homotopy_lift(kind, s, t), v);
}

Vec3 landmark_vector(Landmark landmark) {
  switch (landmark) {
    case Landmark::Fingers:
      return -kE1;
    case Landmark::Thumb:
      return kE2;
    case Landmark::Candle:
      return kE3;
  }
  return kE3;
}

std::string_view to_string(Landmark landmark) {
  switch (landmark) {
    case Landmark::Fingers:
      return "fingers";
    case Landmark::Thumb:
      return "thumb";
    case Landmark::Candle:
      return "candle";
  }
  return "?";
}

Landmark parse_landmark(std::string_view name) {
  if (name == "fingers") return Landmark::Fingers;
  if (name == "thumb") return Landmark::Thumb;
  if (name == "candle") return Landmark::Candle;
  throw InvalidInput("unknown landmark '" + std::string(name) +
                     "' (expected fingers, thumb or candle)");
}

Contrail contrail(Landmark landmark, double s, int nt) {
  if (nt < 2) throw InvalidInput("contrail needs nt >= 2");
  const Vec3 v = landmark_vector(landmark);
  Contrail out{landmark, HomotopyParams(s, 0.0).s(), {}};
  out.points.reserve(static_cast<std::size_t>(nt));
  for (int i = 0; i < nt; ++i) {
    const double t = i == nt - 1 ? kTwoPi : kTwoPi * i / (nt - 1);
    out.points.push_back(evaluate(v, HomotopyKind::DoubleTip, out.s, t));
  }
  return out;
}

int antipode_visits(Landmark landmark, double s, int nt, double tol) {
  if (nt < 64) throw InvalidInput("antipode_visits needs nt >= 64");
  if (!(tol > 0.0)) throw InvalidInput("antipode_visits needs tol > 0");
  const Vec3 v = landmark_vector(landmark);
  int visits = 0;
  bool inside = false;
  for (int i = 1; i < nt - 1; ++i) {
    const double t = kTwoPi * i / (nt - 1);
    const double gap = angle_between(evaluate(v, HomotopyKind::DoubleTip, s, t), -v);
    if (!inside && gap < tol) {
      ++visits;
      inside = true;
    } else if (inside && gap > 2.0 * tol) {
      inside = false;
    }
  }
  return visits;
}

HingeFiberSample hinge_fiber(const Vec3& v, int n) {
  if (n < 3) throw InvalidInput("hinge_fiber needs n >= 3");
  if (std::fabs(norm(v) - 1.0) > kUnitTolerance) throw InvalidInput("hinge_fiber needs unit v");

  HingeFiberSample out;
  out.v = v;
  out.target = hinge(v);
  out.axial_angles.reserve(static_cast<std::size_t>(n));
  out.rotations.reserve(static_cast<std::size_t>(n));

  if (std::fabs(v.y) <= 1e-12) {
    // hinge(v) == v: the fiber in P is the loop of rotations about v.
    out.degenerate = true;
    const Vec3 axis = normalized(Vec3{v.x, 0.0, v.z});
    const double axial = std::atan2(axis.z, axis.x);
    for (int k = 0; k < n; ++k) {
      out.axial_angles.push_back(axial);
      out.rotations.push_back(from_axis_angle(axis, kTwoPi * k / (n - 1)));
    }
    return out;
  }

  // Rotation about e1 carrying v to hinge(v), from the components of v and
  // hinge(v) orthogonal to e1. Its lift is taken with I >= 0.
  const Vec3 from{0.0, v.y, v.z};
  const Vec3 to{0.0, -v.y, v.z};
  const double gamma = std::atan2(dot(cross(from, to), kE1), dot(from, to));
  UnitQuaternion start = from_axis_angle(kE1, gamma);
  if (start.x() < 0.0) start = -start;

  // Every rotation carrying v to hinge(v) is start composed with a turn
  // about v. Stepping that turn uniformly spaces the samples by exactly
  // 2 pi / (n - 1) in rotation distance; the axes sweep the half circle
  // from e1 to -e1. The turn direction is chosen so phi increases.
  const auto along = [&](double psi) {
    return qmul(start, UnitQuaternion(Quaternion{std::cos(0.5 * psi), std::sin(0.5 * psi) * v.x,
                                                 std::sin(0.5 * psi) * v.y,
                                                 std::sin(0.5 * psi) * v.z}));
  };
  const double direction = along(std::numbers::pi).z() >= 0.0 ? 1.0 : -1.0;
  double previous = 0.0;
  for (int k = 0; k < n; ++k) {
    const double psi = k == n - 1 ? kTwoPi : kTwoPi * k / (n - 1);
    const UnitQuaternion q = along(direction * psi);
    double axial = std::atan2(q.z(), q.x());
    // Unwrap onto [0, pi]; the lift ends at -start, axis -e1.
    if (axial < previous - std::numbers::pi / 2) axial += kTwoPi;
    if (k == 0) axial = 0.0;
    if (k == n - 1) axial = std::numbers::pi;
    previous = axial;
    out.axial_angles.push_back(axial);
    out.rotations.push_back(q);
  }
  return out;
}

HemisphereViews hemisphere_views(const GridSpec& grid) {
  HemisphereViews out{grid, {}, {}};
  out.raw.reserve(static_cast<std::size_t>(grid.cells()));
  out.folded.reserve(static_cast<std::size_t>(grid.cells()));
  for (int i = 0; i < grid.ns(); ++i) {
    for (int j = 0; j < grid.nt(); ++j) {
      const UnitQuaternion q = dhat(grid.s(i), grid.t(j));
      const HemiPoint p{q.r(), q.x(), q.z()};
      out.raw.push_back(p);
      out.folded.push_back(p.r < 0.0 ? HemiPoint{-p.r, -p.x, -p.z} : p);
    }
  }
  return out;
}

}  // namespace untangle::analysis
