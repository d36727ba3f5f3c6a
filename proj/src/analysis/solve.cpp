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

#include "untangle/analysis/solve.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "untangle/analysis/grid.hpp"
#include "untangle/analysis/probes.hpp"
#include "untangle/errors.hpp"
#include "untangle/rotation.hpp"

namespace untangle::analysis {
namespace {

constexpr int kCoarseSamples = 128;
constexpr int kWindowSamples = 9;
constexpr int kRefineLevels = 12;
constexpr int kMaxSteps = 400;
constexpr double kZoom = 4.0;
constexpr std::size_t kMaxSeeds = 32;

struct Candidate {
  double s;
  double t;
  double residual;
};

// Recursive 9 x 9 window refinement. A window whose best sample is not the
// centre is rescanned around that sample at the same size (narrow valleys
// otherwise walk out of the shrinking window); the zoom applies once the
// centre wins.
Candidate refine(HomotopyKind kind, const Vec3& v, const Vec3& w, Candidate best,
                 double half_s, double half_t) {
  int level = 0;
  for (int step = 0; step < kMaxSteps && level < kRefineLevels && best.residual > 0.0; ++step) {
    const double s_lo = std::max(0.0, best.s - half_s);
    const double s_hi = std::min(kHalfPi, best.s + half_s);
    const double t_lo = std::max(0.0, best.t - half_t);
    const double t_hi = std::min(kTwoPi, best.t + half_t);
    Candidate level_best = best;
    for (int i = 0; i < kWindowSamples; ++i) {
      const double s = s_lo + (s_hi - s_lo) * i / (kWindowSamples - 1);
      for (int j = 0; j < kWindowSamples; ++j) {
        const double t = t_lo + (t_hi - t_lo) * j / (kWindowSamples - 1);
        const double r = angle_between(evaluate(v, kind, s, t), w);
        if (r < level_best.residual) level_best = {s, t, r};
      }
    }
    if (level_best.residual < best.residual) {
      best = level_best;
    } else {
      half_s /= kZoom;
      half_t /= kZoom;
      ++level;
    }
  }
  return best;
}

}  // namespace

ParamSolution solve_every_which_way(HomotopyKind kind, const Vec3& v, const Vec3& w,
                                    double tol) {
  if (std::fabs(norm(v) - 1.0) > kUnitTolerance || std::fabs(norm(w) - 1.0) > kUnitTolerance) {
    throw InvalidInput("solve_every_which_way needs unit v and w");
  }
  const GridSpec coarse(kCoarseSamples, kCoarseSamples);
  std::vector<double> residual(static_cast<std::size_t>(coarse.cells()));
  for (int i = 0; i < coarse.ns(); ++i) {
    for (int j = 0; j < coarse.nt(); ++j) {
      residual[static_cast<std::size_t>(coarse.index(i, j))] =
          angle_between(evaluate(v, kind, coarse.s(i), coarse.t(j)), w);
    }
  }

  // Local minima of the coarse scan (ties broken by scan order).
  std::vector<Candidate> seeds;
  for (int i = 0; i < coarse.ns(); ++i) {
    for (int j = 0; j < coarse.nt(); ++j) {
      const double here = residual[static_cast<std::size_t>(coarse.index(i, j))];
      bool is_min = true;
      for (int di = -1; di <= 1 && is_min; ++di) {
        for (int dj = -1; dj <= 1; ++dj) {
          const int ni = i + di;
          const int nj = j + dj;
          if ((di == 0 && dj == 0) || ni < 0 || nj < 0 || ni >= coarse.ns() || nj >= coarse.nt()) {
            continue;
          }
          if (residual[static_cast<std::size_t>(coarse.index(ni, nj))] < here) {
            is_min = false;
            break;
          }
        }
      }
      if (is_min) seeds.push_back({coarse.s(i), coarse.t(j), here});
    }
  }
  std::stable_sort(seeds.begin(), seeds.end(),
                   [](const Candidate& a, const Candidate& b) { return a.residual < b.residual; });
  if (seeds.size() > kMaxSeeds) seeds.resize(kMaxSeeds);

  const double step_s = kHalfPi / (coarse.ns() - 1);
  const double step_t = kTwoPi / (coarse.nt() - 1);
  double best_residual = std::numeric_limits<double>::infinity();
  for (const Candidate& seed : seeds) {
    const Candidate c = refine(kind, v, w, seed, step_s, step_t);
    if (c.residual <= tol) return {c.s, c.t, c.residual};
    best_residual = std::min(best_residual, c.residual);
  }
  throw NotFound("no (s, t) carries v to w within " + std::to_string(tol) +
                 " rad (best residual " + std::to_string(best_residual) + ")");
}

namespace {

constexpr double kInteriorMargin = 1e-14;

// Nonzero components (r, I, K) of dhat and their partials in (s, t).
struct LiftJet {
  double value[3];
  double d_ds[3];
  double d_dt[3];
};

LiftJet lift_jet(double s, double t) {
  const double cs = std::cos(s);
  const double ss = std::sin(s);
  const double half_sin = std::sin(0.5 * t);
  const double sin2 = half_sin * half_sin;
  const double st = std::sin(t);
  return {{1.0 - 2.0 * cs * cs * sin2, std::sin(2.0 * s) * sin2, cs * st},
          {2.0 * std::sin(2.0 * s) * sin2, 2.0 * std::cos(2.0 * s) * sin2, -ss * st},
          {-cs * cs * st, 0.5 * std::sin(2.0 * s) * st, cs * std::cos(t)}};
}

}  // namespace

ParamSolution invert_d(const UnitQuaternion& target, double tol) {
  if (std::fabs(target.y()) > kUnitTolerance) {
    throw InvalidInput("target rotation axis leaves the x-z plane (J component " +
                       std::to_string(target.y()) + ")");
  }
  // dhat has I component >= 0, positive inside the rectangle.
  const Quaternion q = target.x() < 0.0 ? -target.quat() : target.quat();
  if (q.x <= 1e-12) {
    throw EdgeDegenerate("target is the identity or lies on the double-twist edge");
  }

  // Closed-form seed: tan s = I / (1 - r) and t / 2 = atan2(1 - r, K cos s),
  // with 1 - r = (I^2 + K^2) / (1 + r) to avoid cancellation near identity.
  const double one_minus_r = (q.x * q.x + q.z * q.z) / (1.0 + q.r);
  const double seed_s = std::atan2(q.x, one_minus_r);
  const double seed_t = 2.0 * std::atan2(one_minus_r, q.z * std::cos(seed_s));
  Candidate best{std::clamp(seed_s, kInteriorMargin, kHalfPi - kInteriorMargin),
                 std::clamp(seed_t, kInteriorMargin, kTwoPi - kInteriorMargin), 0.0};

  // Levenberg-Marquardt on all three components. Next to the collapsing
  // edges r is 1 - K^2/2 to leading order, so s is only visible through I.
  const double goal[3] = {q.r, q.x, q.z};
  double s = best.s;
  double t = best.t;
  const auto cost = [&](double ss, double tt) {
    const LiftJet p = lift_jet(ss, tt);
    double sum = 0.0;
    for (int k = 0; k < 3; ++k) sum += (p.value[k] - goal[k]) * (p.value[k] - goal[k]);
    return sum;
  };
  double f = cost(s, t);
  double lambda = 1e-3;
  for (int iter = 0; iter < 200 && f > 0.0; ++iter) {
    const LiftJet p = lift_jet(s, t);
    double a11 = 0.0, a12 = 0.0, a22 = 0.0, g1 = 0.0, g2 = 0.0;
    for (int k = 0; k < 3; ++k) {
      const double e = p.value[k] - goal[k];
      a11 += p.d_ds[k] * p.d_ds[k];
      a12 += p.d_ds[k] * p.d_dt[k];
      a22 += p.d_dt[k] * p.d_dt[k];
      g1 += p.d_ds[k] * e;
      g2 += p.d_dt[k] * e;
    }
    bool improved = false;
    while (lambda < 1e12) {
      const double m11 = a11 * (1.0 + lambda);
      const double m22 = a22 * (1.0 + lambda);
      const double det = m11 * m22 - a12 * a12;
      if (det > 0.0) {
        const double ns = std::clamp(s - (m22 * g1 - a12 * g2) / det, kInteriorMargin,
                                     kHalfPi - kInteriorMargin);
        const double nt = std::clamp(t - (m11 * g2 - a12 * g1) / det, kInteriorMargin,
                                     kTwoPi - kInteriorMargin);
        const double nf = cost(ns, nt);
        if (nf < f) {
          s = ns;
          t = nt;
          f = nf;
          lambda = std::max(lambda * 0.1, 1e-15);
          improved = true;
          break;
        }
      }
      lambda *= 10.0;
    }
    if (!improved) break;
  }

  const double residual = rotation_distance(dhat(s, t), target);
  if (!(residual <= tol)) {
    throw NotFound("inversion stalled at residual " + std::to_string(residual));
  }
  return {s, t, residual};
}

}  // namespace untangle::analysis
