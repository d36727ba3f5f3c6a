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

#include <array>
#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "untangle/errors.hpp"
#include "untangle/quaternion.hpp"
#include "untangle/rotation.hpp"

namespace untangle {
namespace {

constexpr double kPi = std::numbers::pi;

// Hamilton product written as the 4x4 left-multiplication matrix of a.
std::array<double, 4> oracle_product(const Quaternion& a, const Quaternion& b) {
  const double m[4][4] = {{a.r, -a.x, -a.y, -a.z},
                          {a.x, a.r, -a.z, a.y},
                          {a.y, a.z, a.r, -a.x},
                          {a.z, -a.y, a.x, a.r}};
  const double v[4] = {b.r, b.x, b.y, b.z};
  std::array<double, 4> out{};
  for (int i = 0; i < 4; ++i) {
    for (int k = 0; k < 4; ++k) out[static_cast<std::size_t>(i)] += m[i][k] * v[k];
  }
  return out;
}

Vec3 rodrigues(const Vec3& u, double gamma, const Vec3& w) {
  return w * std::cos(gamma) + cross(u, w) * std::sin(gamma) + u * (dot(u, w) * (1.0 - std::cos(gamma)));
}

UnitQuaternion random_unit(std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  return UnitQuaternion::normalize({g(rng), g(rng), g(rng), g(rng)});
}

Vec3 random_direction(std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  return normalized(Vec3{g(rng), g(rng), g(rng)});
}

void expect_matrix_near(const RotationMatrix& m, const std::array<double, 9>& expected, double tol) {
  for (std::size_t k = 0; k < 9; ++k) EXPECT_NEAR(m.row_major()[k], expected[k], tol) << "entry " << k;
}

TEST(QuaternionTest, BasisProductsFollowHamilton) {
  EXPECT_EQ(qmul(kQuatI, kQuatJ), kQuatK);
  EXPECT_EQ(qmul(kQuatJ, kQuatK), kQuatI);
  EXPECT_EQ(qmul(kQuatK, kQuatI), kQuatJ);
  EXPECT_EQ(qmul(kQuatJ, kQuatI), -kQuatK);
  EXPECT_EQ(qmul(kQuatI, kQuatI), -kQuatOne);
  EXPECT_EQ(qmul(qmul(kQuatI, kQuatJ), kQuatK), -kQuatOne);
}

TEST(QuaternionTest, ProductMatchesMatrixOracle) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (int n = 0; n < 200; ++n) {
    const Quaternion a{u(rng), u(rng), u(rng), u(rng)};
    const Quaternion b{u(rng), u(rng), u(rng), u(rng)};
    const auto expected = oracle_product(a, b);
    const auto got = qmul(a, b).to_array();
    for (std::size_t k = 0; k < 4; ++k) EXPECT_NEAR(got[k], expected[k], 1e-12);
  }
  const Quaternion p{1, 2, 3, 4};
  const Quaternion q{5, 6, 7, 8};
  EXPECT_EQ(qmul(p, q), (Quaternion{-60, 12, 30, 24}));
}

TEST(QuaternionTest, NormIsMultiplicative) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int n = 0; n < 500; ++n) {
    const Quaternion a{u(rng), u(rng), u(rng), u(rng)};
    const Quaternion b{u(rng), u(rng), u(rng), u(rng)};
    EXPECT_LE(std::fabs(norm(qmul(a, b)) - norm(a) * norm(b)), 1e-12 * norm(a) * norm(b));
  }
}

TEST(QuaternionTest, ConjugateReversesProducts) {
  EXPECT_EQ(conj(Quaternion{1, 2, 3, 4}), (Quaternion{1, -2, -3, -4}));
  EXPECT_EQ(conj(kQuatOne), kQuatOne);
  std::mt19937_64 rng(3);
  for (int n = 0; n < 100; ++n) {
    const Quaternion q = random_unit(rng);
    const Quaternion p = random_unit(rng);
    const auto lhs = conj(qmul(q, p)).to_array();
    const auto rhs = oracle_product(conj(p), conj(q));
    for (std::size_t k = 0; k < 4; ++k) EXPECT_NEAR(lhs[k], rhs[k], 1e-12);
  }
}

TEST(UnitQuaternionTest, ConstructionChecksNorm) {
  EXPECT_NO_THROW(UnitQuaternion(0.6, 0.8, 0.0, 0.0));
  EXPECT_NO_THROW(UnitQuaternion(1.0 + 5e-10, 0.0, 0.0, 0.0));
  EXPECT_THROW(UnitQuaternion(1.0, 1.0, 0.0, 0.0), InvalidInput);
  EXPECT_THROW(UnitQuaternion::normalize({0, 0, 0, 0}), InvalidInput);
  EXPECT_THROW(UnitQuaternion::normalize({NAN, 0, 0, 0}), InvalidInput);
  const UnitQuaternion q = UnitQuaternion::normalize({0, 3, 0, 4});
  EXPECT_DOUBLE_EQ(q.x(), 0.6);
  EXPECT_DOUBLE_EQ(q.z(), 0.8);
}

TEST(RotateTest, Examples) {
  const Vec3 v{0.3, -0.2, 0.9};
  EXPECT_LE(max_abs_diff(rotate(UnitQuaternion::identity(), v), v), 1e-15);
  EXPECT_LE(max_abs_diff(rotate(UnitQuaternion(kQuatI), kE3), Vec3{0, 0, -1}), 1e-15);
  const UnitQuaternion quarter(std::cos(kPi / 4), 0.0, 0.0, std::sin(kPi / 4));
  EXPECT_LE(max_abs_diff(rotate(quarter, kE1), kE2), 1e-15);
}

TEST(RotateTest, ConjugationKeepsVectorsPureAndLength) {
  std::mt19937_64 rng(19);
  for (int n = 0; n < 1000; ++n) {
    const UnitQuaternion q = random_unit(rng);
    const Vec3 v = random_direction(rng);
    const Quaternion full = qmul(qmul(q.quat(), Quaternion::pure(v)), conj(q.quat()));
    EXPECT_LE(std::fabs(full.r), 1e-12);
    EXPECT_NEAR(norm(rotate(q, v)), 1.0, 1e-12);
    EXPECT_LE(max_abs_diff(rotate(q, v), to_matrix(q) * v), 1e-12);
  }
}

TEST(FromAxisAngleTest, MatchesRodrigues) {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> angle(-10.0, 10.0);
  for (int n = 0; n < 500; ++n) {
    const Vec3 u = random_direction(rng);
    const double gamma = angle(rng);
    const Vec3 w = random_direction(rng);
    EXPECT_LE(max_abs_diff(rotate(from_axis_angle(u, gamma), w), rodrigues(u, gamma, w)), 1e-9);
  }
}

TEST(FromAxisAngleTest, Examples) {
  const UnitQuaternion one = from_axis_angle(kE3, 0.0);
  EXPECT_EQ(one.quat(), kQuatOne);
  const UnitQuaternion i = from_axis_angle(kE1, kPi);
  EXPECT_NEAR(i.r(), 0.0, 1e-16);
  EXPECT_DOUBLE_EQ(i.x(), 1.0);
  EXPECT_THROW(from_axis_angle({1.0, 1.0, 0.0}, 1.0), InvalidInput);
  EXPECT_THROW(from_axis_angle(kE1, INFINITY), InvalidInput);
}

TEST(FromAxisAngleTest, SingleTwistAboutYMatchesFrameMatrix) {
  for (int k = 0; k <= 16; ++k) {
    const double t = 2.0 * kPi * k / 16;
    const double c = std::cos(t);
    const double s = std::sin(t);
    expect_matrix_near(to_matrix(from_axis_angle(kE2, t)), {c, 0, s, 0, 1, 0, -s, 0, c}, 1e-12);
  }
}

TEST(ToAxisAngleTest, Examples) {
  const AxisAngle zero = to_axis_angle(UnitQuaternion::identity());
  EXPECT_EQ(zero.angle, 0.0);
  EXPECT_FALSE(zero.axis_defined);
  const AxisAngle minus_one = to_axis_angle(UnitQuaternion(-1.0, 0.0, 0.0, 0.0));
  EXPECT_EQ(minus_one.angle, 0.0);
  const AxisAngle half = to_axis_angle(UnitQuaternion(kQuatI));
  EXPECT_TRUE(half.axis_defined);
  EXPECT_DOUBLE_EQ(half.angle, kPi);
  EXPECT_LE(max_abs_diff(half.axis, kE1), 1e-15);
}

TEST(ToAxisAngleTest, HalfTurnAxisIgnoresRoundingInR) {
  for (const double r : {-2.2e-16, 0.0, 2.2e-16}) {
    const AxisAngle a = to_axis_angle(UnitQuaternion(r, 1.0, 0.0, 0.0));
    EXPECT_LE(max_abs_diff(a.axis, kE1), 1e-15) << r;
    EXPECT_NEAR(a.angle, kPi, 1e-15);
    const AxisAngle b = to_axis_angle(UnitQuaternion(r, -0.6, 0.0, 0.8));
    EXPECT_LE(max_abs_diff(b.axis, Vec3{0.6, 0.0, -0.8}), 1e-15) << r;
  }
}

TEST(ToAxisAngleTest, CanonicalisesLargeAngles) {
  const AxisAngle a = to_axis_angle(from_axis_angle(kE3, 1.5 * kPi));
  EXPECT_NEAR(a.angle, 0.5 * kPi, 1e-12);
  EXPECT_LE(max_abs_diff(a.axis, Vec3{0, 0, -1}), 1e-12);
}

TEST(ToAxisAngleTest, RoundTrip) {
  std::mt19937_64 rng(29);
  std::uniform_real_distribution<double> angle(1e-3, kPi - 1e-3);
  for (int n = 0; n < 1000; ++n) {
    const Vec3 u = random_direction(rng);
    const double gamma = angle(rng);
    const AxisAngle back = to_axis_angle(from_axis_angle(u, gamma));
    EXPECT_NEAR(back.angle, gamma, 1e-9);
    EXPECT_LE(max_abs_diff(back.axis, u), 1e-9);
  }
}

TEST(ToMatrixTest, Examples) {
  expect_matrix_near(to_matrix(UnitQuaternion::identity()), {1, 0, 0, 0, 1, 0, 0, 0, 1}, 0.0);
  const double h = kPi / 4;
  expect_matrix_near(to_matrix(UnitQuaternion(std::cos(h), 0.0, std::sin(h), 0.0)),
                     {0, 0, 1, 0, 1, 0, -1, 0, 0}, 1e-15);
  // cos t + K sin t with t = pi/3 rotates about z by 2 pi / 3.
  const double t = kPi / 3;
  const double c = std::cos(2 * t);
  const double s = std::sin(2 * t);
  expect_matrix_near(to_matrix(UnitQuaternion(std::cos(t), 0.0, 0.0, std::sin(t))),
                     {c, -s, 0, s, c, 0, 0, 0, 1}, 1e-15);
}

TEST(ToMatrixTest, ColumnsAreRotatedBasisAndSignBlind) {
  std::mt19937_64 rng(31);
  for (int n = 0; n < 200; ++n) {
    const UnitQuaternion q = random_unit(rng);
    const RotationMatrix m = to_matrix(q);
    EXPECT_LE(max_abs_diff(m.column(0), rotate(q, kE1)), 1e-12);
    EXPECT_LE(max_abs_diff(m.column(1), rotate(q, kE2)), 1e-12);
    EXPECT_LE(max_abs_diff(m.column(2), rotate(q, kE3)), 1e-12);
    EXPECT_EQ(m.max_abs_diff(to_matrix(-q)), 0.0);
    EXPECT_NEAR(m.determinant(), 1.0, 1e-12);
  }
}

TEST(ToMatrixTest, Homomorphism) {
  std::mt19937_64 rng(37);
  double worst = 0.0;
  for (int n = 0; n < 1000; ++n) {
    const UnitQuaternion a = random_unit(rng);
    const UnitQuaternion b = random_unit(rng);
    worst = std::max(worst, to_matrix(qmul(a, b)).max_abs_diff(to_matrix(a) * to_matrix(b)));
  }
  EXPECT_LE(worst, 1e-9);
}

TEST(RotationMatrixTest, RejectsNonRotations) {
  EXPECT_THROW(RotationMatrix({1, 0, 0, 0, 1, 0, 0, 0, -1}), InvalidInput);
  EXPECT_THROW(RotationMatrix({2, 0, 0, 0, 1, 0, 0, 0, 1}), InvalidInput);
  EXPECT_NO_THROW(RotationMatrix({0, -1, 0, 1, 0, 0, 0, 0, 1}));
}

TEST(BallPointTest, Examples) {
  EXPECT_EQ(to_ball_point(UnitQuaternion::identity()).rho, 0.0);
  const BallPoint half = to_ball_point(UnitQuaternion(kQuatI));
  EXPECT_DOUBLE_EQ(half.rho, 1.0);
  EXPECT_LE(max_abs_diff(half.u, kE1), 1e-15);
  EXPECT_TRUE(half == (BallPoint{1.0, {-1, 0, 0}}));
  EXPECT_FALSE((BallPoint{0.5, kE1}) == (BallPoint{0.5, {-1, 0, 0}}));
  const BallPoint quarter = to_ball_point(from_axis_angle(kE3, kPi / 2));
  EXPECT_NEAR(quarter.rho, 0.5, 1e-15);
  EXPECT_LE(max_abs_diff(quarter.u, kE3), 1e-15);
}

TEST(RotationDistanceTest, Examples) {
  std::mt19937_64 rng(41);
  const UnitQuaternion q = random_unit(rng);
  EXPECT_EQ(rotation_distance(q, q), 0.0);
  EXPECT_EQ(rotation_distance(q, -q), 0.0);
  EXPECT_NEAR(rotation_distance(UnitQuaternion::identity(), UnitQuaternion(kQuatI)), kPi, 1e-15);
  EXPECT_TRUE(same_rotation(q, -q, 1e-9));
  EXPECT_FALSE(same_rotation(UnitQuaternion::identity(), UnitQuaternion(kQuatI), 1e-9));
  const Vec3 u = random_direction(rng);
  EXPECT_TRUE(same_rotation(from_axis_angle(u, kPi), from_axis_angle(-u, kPi), 1e-9));
}

TEST(RotationDistanceTest, AgreesWithAngleOfRelativeRotation) {
  std::mt19937_64 rng(43);
  for (int n = 0; n < 500; ++n) {
    const UnitQuaternion a = random_unit(rng);
    const UnitQuaternion b = random_unit(rng);
    const double d = rotation_distance(a, b);
    EXPECT_NEAR(d, rotation_distance(b, a), 1e-15);
    EXPECT_NEAR(d, 2.0 * std::acos(std::min(1.0, std::fabs(dot4(a.quat(), b.quat())))), 1e-7);
    EXPECT_NEAR(d, to_axis_angle(qmul(a.inverse(), b)).angle, 1e-9);
  }
}

}  // namespace
}  // namespace untangle
