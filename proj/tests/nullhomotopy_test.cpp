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

#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "untangle/errors.hpp"
#include "untangle/nullhomotopy.hpp"
#include "untangle/rotation.hpp"

namespace untangle {
namespace {

constexpr double kPi = std::numbers::pi;

double grid_s(int i, int n) { return i == n - 1 ? kHalfPi : kHalfPi * i / (n - 1); }
double grid_t(int j, int n) { return j == n - 1 ? kTwoPi : kTwoPi * j / (n - 1); }

// Rotation about a unit axis as a matrix (Rodrigues), independent of the
// quaternion code.
RotationMatrix axis_matrix(const Vec3& u, double a) {
  const double c = std::cos(a);
  const double s = std::sin(a);
  const double k = 1.0 - c;
  return RotationMatrix({c + u.x * u.x * k, u.x * u.y * k - u.z * s, u.x * u.z * k + u.y * s,
                         u.y * u.x * k + u.z * s, c + u.y * u.y * k, u.y * u.z * k - u.x * s,
                         u.z * u.x * k - u.y * s, u.z * u.y * k + u.x * s, c + u.z * u.z * k});
}

RotationMatrix z_rotation(double a) { return axis_matrix(kE3, a); }

TEST(HomotopyParamsTest, ChecksDomain) {
  EXPECT_NO_THROW(HomotopyParams(0.0, 0.0));
  EXPECT_NO_THROW(HomotopyParams(kHalfPi, kTwoPi));
  EXPECT_THROW(HomotopyParams(-0.1, 1.0), InvalidInput);
  EXPECT_THROW(HomotopyParams(0.1, 7.0), InvalidInput);
  EXPECT_THROW(HomotopyParams(NAN, 1.0), InvalidInput);
  EXPECT_THROW(dhat(2.0, 1.0), InvalidInput);
  // Rounding just past an edge snaps onto it.
  EXPECT_EQ(HomotopyParams(kHalfPi + 1e-15, 0.0).s(), kHalfPi);
}

TEST(HomotopyKindTest, Names) {
  EXPECT_EQ(to_string(HomotopyKind::DoubleTip), "D");
  EXPECT_EQ(to_string(HomotopyKind::FK), "FK");
  EXPECT_EQ(parse_homotopy_kind("D"), HomotopyKind::DoubleTip);
  EXPECT_EQ(parse_homotopy_kind("FK"), HomotopyKind::FK);
  EXPECT_THROW(parse_homotopy_kind("X"), InvalidInput);
}

TEST(DhatTest, Examples) {
  for (int j = 0; j <= 32; ++j) {
    const double t = kTwoPi * j / 32;
    const UnitQuaternion q = dhat(0.0, t);
    EXPECT_NEAR(q.r(), std::cos(t), 1e-15);
    EXPECT_EQ(q.x(), 0.0);
    EXPECT_EQ(q.y(), 0.0);
    EXPECT_NEAR(q.z(), std::sin(t), 1e-15);
    const UnitQuaternion top = dhat(kHalfPi, t);
    EXPECT_NEAR(top.r(), 1.0, 1e-15);
    EXPECT_NEAR(top.x(), 0.0, 1e-15);
    EXPECT_NEAR(top.z(), 0.0, 1e-15);
  }
  const UnitQuaternion centre = dhat(kPi / 4, kPi);
  EXPECT_NEAR(centre.r(), 0.0, 1e-15);
  EXPECT_NEAR(centre.x(), 1.0, 1e-15);
  EXPECT_NEAR(centre.z(), 0.0, 1e-15);
}

TEST(DhatTest, UnitNormNoJAndNonNegativeI) {
  constexpr int n = 129;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const UnitQuaternion q = dhat(grid_s(i, n), grid_t(j, n));
      EXPECT_LE(std::fabs(norm(q.quat()) - 1.0), 1e-12);
      EXPECT_EQ(q.y(), 0.0);
      EXPECT_GE(q.x(), 0.0);
    }
  }
}

TEST(DRotationTest, Examples) {
  for (int i = 0; i < 9; ++i) {
    EXPECT_LE(d_rotation(grid_s(i, 9), 0.0).max_abs_diff(RotationMatrix::identity()), 0.0);
  }
  EXPECT_LE(d_rotation(0.0, kPi / 2).max_abs_diff(RotationMatrix({-1, 0, 0, 0, -1, 0, 0, 0, 1})),
            1e-15);
  EXPECT_LE(d_rotation(kPi / 4, kPi).max_abs_diff(RotationMatrix({1, 0, 0, 0, -1, 0, 0, 0, -1})),
            1e-15);
}

TEST(DRotationTest, StartsAsDoubleTwistAndEndsConstant) {
  constexpr int n = 257;
  for (int j = 0; j < n; ++j) {
    const double t = grid_t(j, n);
    EXPECT_LE(d_rotation(0.0, t).max_abs_diff(z_rotation(2.0 * t)), 1e-12);
    EXPECT_LE(d_rotation(kHalfPi, t).max_abs_diff(RotationMatrix::identity()), 1e-12);
    EXPECT_LE(d_rotation(grid_s(j, n), kTwoPi).max_abs_diff(RotationMatrix::identity()), 1e-12);
    EXPECT_LE(to_matrix(fk_hat(grid_s(j, n), kTwoPi)).max_abs_diff(RotationMatrix::identity()),
              1e-12);
  }
}

TEST(FkHatTest, Examples) {
  for (int j = 0; j <= 16; ++j) {
    const double t = kTwoPi * j / 16;
    EXPECT_EQ(fk_hat(0.0, t).quat(), dhat(0.0, t).quat());
    EXPECT_TRUE(same_rotation(fk_hat(kHalfPi, t), UnitQuaternion::identity(), 1e-12));
  }
  const UnitQuaternion q = fk_hat(kPi / 4, kPi / 2);
  EXPECT_NEAR(q.r(), 0.5, 1e-15);
  EXPECT_NEAR(q.x(), 0.5, 1e-15);
  EXPECT_NEAR(q.y(), 0.5, 1e-15);
  EXPECT_NEAR(q.z(), 0.5, 1e-15);
}

TEST(FkHatTest, SharesRealAndIWithDAndLeavesP) {
  constexpr int n = 65;
  for (int i = 1; i < n - 1; ++i) {
    const double s = grid_s(i, n);
    double max_j = 0.0;
    for (int j = 0; j < n; ++j) {
      const double t = grid_t(j, n);
      const UnitQuaternion f = fk_hat(s, t);
      const UnitQuaternion d = dhat(s, t);
      EXPECT_EQ(f.r(), d.r());
      EXPECT_EQ(f.x(), d.x());
      EXPECT_NEAR(f.y(), std::sin(s) * std::cos(s) * std::sin(t), 1e-15);
      EXPECT_NEAR(f.z(), std::cos(s) * std::cos(s) * std::sin(t), 1e-15);
      max_j = std::max(max_j, std::fabs(f.y()));
    }
    EXPECT_GT(max_j, 0.0) << "s = " << s;
  }
}

TEST(PhiTest, Examples) {
  EXPECT_NEAR(phi(1e-9, kPi / 2), kPi / 2, 1e-8);
  EXPECT_NEAR(phi(kPi / 4, kPi), 0.0, 1e-15);
  EXPECT_NEAR(phi(kPi / 4, 1.5 * kPi), std::atan2(-std::sqrt(0.5), 0.5), 1e-15);
  EXPECT_NEAR(phi(kPi / 4, 1.5 * kPi), -0.9553166181245092, 1e-15);
  EXPECT_THROW(phi(kHalfPi, 1.0), UndefinedAxis);
  EXPECT_THROW(phi(0.3, 0.0), UndefinedAxis);
}

TEST(PhiTest, MatchesCotangentForm) {
  // tan phi = csc s cot(t/2) in the interior.
  for (int i = 1; i < 16; ++i) {
    for (int j = 1; j < 32; ++j) {
      const double s = kHalfPi * i / 16;
      const double t = kTwoPi * j / 32;
      EXPECT_NEAR(std::tan(phi(s, t)), 1.0 / (std::sin(s) * std::tan(0.5 * t)), 1e-9);
    }
  }
}

TEST(ThetaTest, Examples) {
  for (int j = 0; j <= 16; ++j) {
    const double t = kPi * j / 16;
    EXPECT_NEAR(theta(0.0, t), 2.0 * t, 1e-7);
    EXPECT_EQ(theta(kHalfPi, 2.0 * t), 0.0);
  }
  EXPECT_NEAR(theta(kPi / 4, kPi), kPi, 1e-15);
}

TEST(PhiThetaTest, ReconstructRotation) {
  constexpr int n = 65;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const double s = grid_s(i, n);
      const double t = grid_t(j, n);
      const double th = theta(s, t);
      // theta = 2 pi is the identity again.
      if (th <= 1e-6 || kTwoPi - th <= 1e-6) continue;
      const double ph = phi(s, t);
      EXPECT_GE(ph, -kPi / 2);
      EXPECT_LE(ph, kPi / 2);
      const UnitQuaternion rebuilt = from_axis_angle({std::cos(ph), 0.0, std::sin(ph)}, th);
      EXPECT_TRUE(same_rotation(rebuilt, dhat(s, t), 1e-9)) << "s=" << s << " t=" << t;
    }
  }
}

TEST(SampleTest, CarriesConsistentFields) {
  const HomotopySample d = sample(HomotopyKind::DoubleTip, kPi / 4, kPi);
  EXPECT_EQ(d.matrix.max_abs_diff(to_matrix(d.q)), 0.0);
  ASSERT_TRUE(d.phi.has_value());
  EXPECT_NEAR(*d.phi, 0.0, 1e-15);
  EXPECT_NEAR(d.theta, kPi, 1e-15);
  EXPECT_FALSE(sample(HomotopyKind::DoubleTip, kHalfPi, 1.0).phi.has_value());
  const HomotopySample fk = sample(HomotopyKind::FK, kPi / 4, kPi / 2);
  EXPECT_FALSE(fk.phi.has_value());
  EXPECT_GT(fk.axis_angle.axis.y, 0.0);
}

TEST(SingleTwistTest, Examples) {
  EXPECT_EQ(single_twist(kE2, 0.0).quat(), kQuatOne);
  const UnitQuaternion end = single_twist(kE2, kTwoPi);
  EXPECT_NEAR(end.r(), -1.0, 1e-15);
  EXPECT_TRUE(same_rotation(end, UnitQuaternion::identity(), 1e-12));
  for (int j = 0; j <= 8; ++j) {
    const double t = kTwoPi * j / 8;
    EXPECT_LE(to_matrix(single_twist(kE2, t)).max_abs_diff(axis_matrix(kE2, t)), 1e-12);
  }
  EXPECT_THROW(single_twist({0.0, 2.0, 0.0}, 1.0), InvalidInput);
}

TEST(TippedSingleTwistTest, Examples) {
  for (int j = 0; j <= 16; ++j) {
    const double t = kTwoPi * j / 16;
    EXPECT_TRUE(same_rotation(tipped_single_twist(0.0, t), single_twist(kE3, t), 1e-12));
    EXPECT_LE(to_matrix(tipped_single_twist(kPi, t)).max_abs_diff(z_rotation(-t)), 1e-12);
    EXPECT_LE(to_matrix(tipped_single_twist(kPi / 2, t)).max_abs_diff(axis_matrix({0, -1, 0}, t)),
              1e-12);
  }
  EXPECT_THROW(tipped_single_twist(-0.5, 1.0), InvalidInput);
  EXPECT_THROW(tipped_single_twist(4.0, 1.0), InvalidInput);
}

TEST(DoubleTipFactorsTest, ProductIsDhat) {
  constexpr int n = 65;
  double worst = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const double s = grid_s(i, n);
      const double t = grid_t(j, n);
      const auto p = double_tip_factors(s, t).product().quat().to_array();
      const auto d = dhat(s, t).quat().to_array();
      for (std::size_t k = 0; k < 4; ++k) worst = std::max(worst, std::fabs(p[k] - d[k]));
    }
  }
  EXPECT_LE(worst, 1e-12);
}

TEST(DoubleTipFactorsTest, LeftwardTippedTwistActsFirst) {
  // Composition of rotation matrices: the leftward tipped twist (axis
  // toward -y) acts first, the rightward one second.
  for (int i = 0; i <= 8; ++i) {
    for (int j = 0; j <= 8; ++j) {
      const double s = kHalfPi * i / 8;
      const double t = kTwoPi * j / 8;
      const RotationMatrix first = axis_matrix({0, -std::sin(s), std::cos(s)}, t);
      const RotationMatrix second = axis_matrix({0, std::sin(s), std::cos(s)}, t);
      EXPECT_LE(d_rotation(s, t).max_abs_diff(second * first), 1e-12);
    }
  }
}

TEST(DoubleTipFactorsTest, Examples) {
  const TipFactors top = double_tip_factors(kHalfPi, 1.3);
  EXPECT_TRUE(same_rotation(qmul(top.first, top.second), UnitQuaternion::identity(), 1e-12));
  EXPECT_TRUE(same_rotation(top.product(), UnitQuaternion::identity(), 1e-12));
  const TipFactors bottom = double_tip_factors(0.0, 1.3);
  EXPECT_EQ(bottom.first.quat(), bottom.second.quat());
  // s = pi/6, t = pi: cos^2 s = 3/4, so dhat = -1/2 + (sqrt(3)/2) I.
  const auto p = double_tip_factors(kPi / 6, kPi).product();
  EXPECT_NEAR(p.r(), -0.5, 1e-15);
  EXPECT_NEAR(p.x(), std::sqrt(3.0) / 2.0, 1e-15);
  EXPECT_NEAR(p.y(), 0.0, 1e-15);
  EXPECT_NEAR(p.z(), 0.0, 1e-15);
}

TEST(ConcatVsProductTest, SameAxisAgrees) {
  EXPECT_TRUE(concat_vs_product_check(kE3, 64));
  EXPECT_TRUE(concat_vs_product_check(kE2, 64));
  EXPECT_LE(concat_product_gap(kE3, kE3, 64), 1e-9);
  EXPECT_THROW(concat_vs_product_check(kE3, 1), InvalidInput);
}

TEST(ConcatVsProductTest, DifferentAxesDisagree) {
  EXPECT_GT(concat_product_gap(kE3, kE1, 64), 0.1);
}

}  // namespace
}  // namespace untangle
