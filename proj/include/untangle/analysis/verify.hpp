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
#include <vector>

#include "untangle/analysis/grid.hpp"
#include "untangle/analysis/report.hpp"
#include "untangle/nullhomotopy.hpp"
#include "untangle/quaternion.hpp"
#include "untangle/vec3.hpp"

namespace untangle::analysis {

// Max |J component| of the lift over the grid; passes at <= 1e-15.
VerificationReport verify_in_p(HomotopyKind kind, const GridSpec& grid);

// Minimum rotation_distance between images of D at grid cells that are not
// 8-neighbours, found by hashing the lifts on a lattice sized to the search
// radius (growing the radius until a pair is found). Close pairs whose chord
// matches the midpoint tangent prediction are one sheet compressed near a
// collapsing edge and are skipped. Collisions are the remaining pairs at
// distance <= tol; passes when there are none.
//
// Meant for interior grids, where the I component of dhat is positive and
// the only sign ambiguity is near the r-z equator; hashing looks at both
// q and -q. Throws ResourceExhausted if a bucket exceeds bucket_cap.
VerificationReport verify_injectivity(const GridSpec& grid, double tol,
                                      std::size_t bucket_cap = 4096);

struct NearestSample {
  double s;
  double t;
  double distance;
};

// Grid cell whose image under D is closest to target (brute force).
NearestSample nearest_grid_sample(const UnitQuaternion& target, const GridSpec& grid);

// Draws n_targets rotations in P (phi uniform in (-pi/2, pi/2], theta
// uniform in [0, 2pi)) and reports the worst nearest-sample distance.
VerificationReport verify_surjectivity(const GridSpec& grid, int n_targets, double tol,
                                       std::uint64_t seed);

struct PreimageClusters {
  // Clusters not touching the identity edges (t = 0, t = 2pi, s = pi/2).
  int interior = 0;
  // Whether some cluster touches the identity edges; all of those are one
  // point of the quotient Q.
  bool identity_cluster = false;

  int total() const { return interior + (identity_cluster ? 1 : 0); }
};

// Connected clusters (8-neighbour, plus the identifications of Q along the
// edges when the grid includes them) of cells where the image of v under D
// is within tol of w. Throws HingeDegeneracy when w is within tol of hinge(v).
PreimageClusters preimage_clusters(const Vec3& v, const Vec3& w, const GridSpec& grid,
                                   double tol);

// Mod-2 degree evidence: n_pairs seeded (v, w) with w outside the hinge
// cone; each must have exactly one preimage cluster.
VerificationReport verify_degree(int n_pairs, const GridSpec& grid, double tol,
                                 double hinge_cone, std::uint64_t seed);

// solve_every_which_way over an n x n Fibonacci-sphere grid of (v, w)
// pairs for each listed kind.
VerificationReport verify_every_which_way(const std::vector<HomotopyKind>& kinds, int n,
                                          double tol);

// Thumb reaches -J twice for s < pi/4, once at pi/4, never after, at
// s = k pi/16, k = 0..8.
VerificationReport verify_thumb_counts(int nt, double tol);

// Candle reaches -K at s = pi/4 only, and the solver pins it at (pi/4, pi).
VerificationReport verify_candle_once(int nt, double tol);

}  // namespace untangle::analysis
