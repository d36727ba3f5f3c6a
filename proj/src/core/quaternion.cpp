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

#include "untangle/quaternion.hpp"

#include <cmath>
#include <string>

#include "untangle/errors.hpp"

namespace untangle {

UnitQuaternion::UnitQuaternion(const Quaternion& q) : q_(q) {
  const double n = norm(q);
  if (!(std::fabs(n - 1.0) <= kUnitTolerance)) {
    throw InvalidInput("quaternion is not unit: norm = " + std::to_string(n));
  }
}

UnitQuaternion UnitQuaternion::normalize(const Quaternion& q) {
  const double n = norm(q);
  if (!(n > 0.0) || !std::isfinite(n)) {
    throw InvalidInput("cannot normalize a zero or non-finite quaternion");
  }
  return UnitQuaternion(q * (1.0 / n), Unchecked{});
}

UnitQuaternion qmul(const UnitQuaternion& a, const UnitQuaternion& b) {
  return UnitQuaternion(qmul(a.q_, b.q_), UnitQuaternion::Unchecked{});
}

}  // namespace untangle
