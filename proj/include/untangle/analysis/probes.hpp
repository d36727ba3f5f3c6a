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

#include <string_view>
#include <vector>

#include "untangle/analysis/grid.hpp"
#include "untangle/nullhomotopy.hpp"
#include "untangle/quaternion.hpp"
#include "untangle/vec3.hpp"

namespace untangle::analysis {

// Reflection of v across the x-z plane.
constexpr Vec3 hinge(const Vec3& v) { return {v.x, -v.y, v.z}; }

// H(s, t) applied to v, for H the nullhomotopy of the given kind.
Vec3 evaluate(const Vec3& v, HomotopyKind kind, double s, double t);

// Marked directions of the hand glyph in its default pose.
enum class Landmark {
  Fingers,  // -e1, pointing away from the viewer
  Thumb,    // e2, pointing right
  Candle,   // e3, pointing up
};

Vec3 landmark_vector(Landmark landmark);
std::string_view to_string(Landmark landmark);
// Accepts "fingers", "thumb", "candle". Throws InvalidInput otherwise.
Landmark parse_landmark(std::string_view name);

// Path of one landmark during the movie of D at fixed s.
struct Contrail {
  Landmark landmark;
  double s;
  std::vector<Vec3> points;
};

// points[i] = D(s, 2pi i / (nt - 1)) applied to the landmark. nt >= 2.
Contrail contrail(Landmark landmark, double s, int nt);

// Number of separate visits of the landmark to its antipode while t runs
// through (0, 2pi) under D at fixed s. A visit starts when the angle to the
// antipode drops below tol and ends once it rises above 2 tol. nt >= 64.
int antipode_visits(Landmark landmark, double s, int nt, double tol);

// n rotations carrying v to hinge(v), spaced 2 pi / (n - 1) apart along the
// fiber. Their axes (cos phi, 0, sin phi) lie in the x-z plane and sweep phi
// from 0 to pi; the lifts run continuously from the rotation about e1 to
// its negative.
//
// When |v.y| <= 1e-12 the hinge is v itself and the fiber in P is the
// circle of rotations about v; `degenerate` is set and the rotations sample
// that circle instead.
struct HingeFiberSample {
  Vec3 v;
  Vec3 target;
  std::vector<double> axial_angles;
  std::vector<UnitQuaternion> rotations;
  bool degenerate = false;
};

HingeFiberSample hinge_fiber(const Vec3& v, int n);

// The lift dhat as points (r, x, z) of the r-x-z two-sphere.
struct HemiPoint {
  double r;
  double x;
  double z;
};

// Two views of dhat over a grid, both indexed like GridSpec::index.
// `raw` lies in the x >= 0 hemisphere; `folded` replaces each point with
// r < 0 by its antipode so everything lies in the r >= 0 hemisphere.
struct HemisphereViews {
  GridSpec grid;
  std::vector<HemiPoint> raw;
  std::vector<HemiPoint> folded;
};

HemisphereViews hemisphere_views(const GridSpec& grid);

}  // namespace untangle::analysis
