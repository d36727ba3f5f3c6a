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

#include "untangle/nullhomotopy.hpp"
#include "untangle/quaternion.hpp"
#include "untangle/vec3.hpp"

namespace untangle::analysis {

struct ParamSolution {
  double s;
  double t;
  double residual;
};

// Finds (s, t) with angle(H(s, t) v, w) <= tol. A 128 x 128 scan of the
// closed rectangle supplies seeds (its local minima, best first); each
// seed is refined by rescanning a 9 x 9 window, recentred while that helps
// and shrunk by 4 otherwise, for 12 levels. Throws NotFound if no seed
// reaches tol.
ParamSolution solve_every_which_way(HomotopyKind kind, const Vec3& v, const Vec3& w,
                                    double tol);

// The unique interior (s, t) with dhat(s, t) the same rotation as target.
// Throws InvalidInput when target is not in P, EdgeDegenerate for the
// identity or double-twist edge, NotFound if the polish fails to reach tol.
// Seeded in closed form, then polished by Levenberg-Marquardt on (r, I, K).
ParamSolution invert_d(const UnitQuaternion& target, double tol);

}  // namespace untangle::analysis
