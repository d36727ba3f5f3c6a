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

#include "untangle/analysis/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numbers>
#include <numeric>
#include <string>
#include <unordered_map>

#include "untangle/analysis/probes.hpp"
#include "untangle/analysis/sampling.hpp"
#include "untangle/analysis/solve.hpp"
#include "untangle/errors.hpp"
#include "untangle/rotation.hpp"

namespace untangle::analysis {
namespace {

std::vector<Quaternion> lift_grid(HomotopyKind kind, const GridSpec& grid) {
  std::vector<Quaternion> out;
  out.reserve(static_cast<std::size_t>(grid.cells()));
  for (int i = 0; i < grid.ns(); ++i) {
    for (int j = 0; j < grid.nt(); ++j) {
      out.push_back(homotopy_lift(kind, grid.s(i), grid.t(j)).quat());
    }
  }
  return out;
}

// Lattice cell of a lift, packed from its (r, x, z) coordinates. The J
// coordinate is left out of the key; nearby lifts still share or touch
// cells in the projection.
using CellKey = std::uint64_t;

constexpr int kKeyBits = 21;
constexpr std::int64_t kKeyOffset = std::int64_t{1} << (kKeyBits - 1);

CellKey pack_cell(std::int64_t a, std::int64_t b, std::int64_t c) {
  const auto field = [](std::int64_t v) {
    return static_cast<std::uint64_t>(v + kKeyOffset) & ((std::uint64_t{1} << kKeyBits) - 1);
  };
  return (field(a) << (2 * kKeyBits)) | (field(b) << kKeyBits) | field(c);
}

struct Lattice {
  double cell;

  std::int64_t coord(double v) const { return static_cast<std::int64_t>(std::floor(v / cell)); }
};

double lift_distance(const Quaternion& a, const Quaternion& b) {
  return rotation_distance(UnitQuaternion::normalize(a), UnitQuaternion::normalize(b));
}

// A close pair is explained by compression of a single sheet when the
// chord q_b - q_a matches the tangent prediction J(m) (p_b - p_a) at the
// parameter midpoint to within half its length. A prediction below the
// floor means the map is locally collapsed there, which is a collision.
bool same_sheet(const GridSpec& grid, const std::vector<Quaternion>& lifts, std::int64_t a,
                std::int64_t b) {
  constexpr double kStep = 1e-6;
  constexpr double kResolvedFloor = 1e-12;
  const int nt = grid.nt();
  const Quaternion& qa = lifts[static_cast<std::size_t>(a)];
  const Quaternion& qb = lifts[static_cast<std::size_t>(b)];
  if (dot4(qa, qb) < 0.0) return false;
  const double sa = grid.s(static_cast<int>(a / nt));
  const double ta = grid.t(static_cast<int>(a % nt));
  const double sb = grid.s(static_cast<int>(b / nt));
  const double tb = grid.t(static_cast<int>(b % nt));
  const double sm = 0.5 * (sa + sb);
  const double tm = 0.5 * (ta + tb);
  const double hs = std::min({kStep, sm, kHalfPi - sm});
  const double ht = std::min({kStep, tm, kTwoPi - tm});
  if (hs <= 0.0 || ht <= 0.0) return false;
  const auto lift = [](double s, double t) { return dhat(s, t).quat(); };
  const Quaternion d_ds = (lift(sm + hs, tm) - lift(sm - hs, tm)) * (0.5 / hs);
  const Quaternion d_dt = (lift(sm, tm + ht) - lift(sm, tm - ht)) * (0.5 / ht);
  const Quaternion predicted = d_ds * (sb - sa) + d_dt * (tb - ta);
  const double predicted_norm = norm(predicted);
  if (predicted_norm < kResolvedFloor) return false;
  return norm((qb - qa) - predicted) <= 0.5 * predicted_norm;
}

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t a) {
    while (parent_[a] != a) {
      parent_[a] = parent_[parent_[a]];
      a = parent_[a];
    }
    return a;
  }

  void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

VerificationReport verify_in_p(HomotopyKind kind, const GridSpec& grid) {
  constexpr double kTolerance = 1e-15;
  double worst = 0.0;
  double worst_s = 0.0;
  double worst_t = 0.0;
  for (int i = 0; i < grid.ns(); ++i) {
    for (int j = 0; j < grid.nt(); ++j) {
      const double y = std::fabs(homotopy_lift(kind, grid.s(i), grid.t(j)).y());
      if (y > worst) {
        worst = y;
        worst_s = grid.s(i);
        worst_t = grid.t(j);
      }
    }
  }
  VerificationReport report{"in-p", worst <= kTolerance, worst, {}};
  report.details["kind"] = std::string(to_string(kind));
  report.details["ns"] = grid.ns();
  report.details["nt"] = grid.nt();
  report.details["tolerance"] = kTolerance;
  report.details["max_j_at"] = {{"s", worst_s}, {"t", worst_t}};
  return report;
}

VerificationReport verify_injectivity(const GridSpec& grid, double tol, std::size_t bucket_cap) {
  const std::vector<Quaternion> lifts = lift_grid(HomotopyKind::DoubleTip, grid);
  const int nt = grid.nt();
  const auto n = static_cast<std::int64_t>(lifts.size());

  // Rotation distance d between lifts a, b corresponds to the chord
  // |a -+ b| = 2 sin(d / 4) in R^4, which bounds each coordinate gap.
  double radius = std::max(8.0 * tol, 4e-6);
  double min_distance = std::numeric_limits<double>::infinity();
  std::int64_t min_a = -1;
  std::int64_t min_b = -1;
  std::int64_t collisions = 0;
  std::int64_t comparisons = 0;
  std::int64_t same_sheet_pairs = 0;
  for (;;) {
    const Lattice lattice{2.0 * std::sin(radius / 4.0)};
    std::unordered_map<CellKey, std::vector<std::int64_t>> buckets;
    buckets.reserve(static_cast<std::size_t>(n));
    for (std::int64_t k = 0; k < n; ++k) {
      const Quaternion& q = lifts[static_cast<std::size_t>(k)];
      auto& bucket = buckets[pack_cell(lattice.coord(q.r), lattice.coord(q.x), lattice.coord(q.z))];
      bucket.push_back(k);
      if (bucket.size() > bucket_cap) {
        throw ResourceExhausted("injectivity hash bucket exceeded " + std::to_string(bucket_cap) +
                                " entries");
      }
    }

    min_distance = std::numeric_limits<double>::infinity();
    collisions = 0;
    comparisons = 0;
    same_sheet_pairs = 0;
    for (std::int64_t a = 0; a < n; ++a) {
      const Quaternion& qa = lifts[static_cast<std::size_t>(a)];
      const std::int64_t ia = a / nt;
      const std::int64_t ja = a % nt;
      for (const double sign : {1.0, -1.0}) {
        const Quaternion probe = qa * sign;
        const std::int64_t cr = lattice.coord(probe.r);
        const std::int64_t cx = lattice.coord(probe.x);
        const std::int64_t cz = lattice.coord(probe.z);
        for (std::int64_t dr = -1; dr <= 1; ++dr) {
          for (std::int64_t dx = -1; dx <= 1; ++dx) {
            for (std::int64_t dz = -1; dz <= 1; ++dz) {
              const auto it = buckets.find(pack_cell(cr + dr, cx + dx, cz + dz));
              if (it == buckets.end()) continue;
              for (const std::int64_t b : it->second) {
                // Each unordered pair once; a lift and its own negative are
                // never both probed against b < a.
                if (b <= a) continue;
                const std::int64_t ib = b / nt;
                const std::int64_t jb = b % nt;
                if (std::abs(ia - ib) <= 1 && std::abs(ja - jb) <= 1) continue;
                const Quaternion& qb = lifts[static_cast<std::size_t>(b)];
                // Probing a and -a can reach the same b twice; only the
                // probe on b's side of a counts.
                if ((dot4(qa, qb) < 0.0) != (sign < 0.0)) continue;
                ++comparisons;
                const double d = lift_distance(qa, qb);
                if (d > tol && d >= min_distance) continue;
                if (same_sheet(grid, lifts, a, b)) {
                  ++same_sheet_pairs;
                  continue;
                }
                if (d <= tol) ++collisions;
                if (d < min_distance) {
                  min_distance = d;
                  min_a = a;
                  min_b = b;
                }
              }
            }
          }
        }
      }
    }
    // Every pair within `radius` was compared, so a minimum at or below it
    // is the true minimum.
    if (min_distance <= radius || radius >= std::numbers::pi) break;
    radius = std::min(std::numbers::pi, radius * 4.0);
  }

  VerificationReport report{"injective", collisions == 0 && min_distance > tol, min_distance, {}};
  report.details["ns"] = grid.ns();
  report.details["nt"] = grid.nt();
  report.details["include_edges"] = grid.include_edges();
  report.details["tolerance"] = tol;
  report.details["collisions"] = collisions;
  report.details["pairs_compared"] = comparisons;
  report.details["same_sheet_pairs"] = same_sheet_pairs;
  report.details["search_radius"] = radius;
  if (min_a >= 0) {
    report.details["closest_pair"] = {
        {{"s", grid.s(static_cast<int>(min_a / nt))}, {"t", grid.t(static_cast<int>(min_a % nt))}},
        {{"s", grid.s(static_cast<int>(min_b / nt))}, {"t", grid.t(static_cast<int>(min_b % nt))}}};
  }
  return report;
}

namespace {

NearestSample nearest_in(const std::vector<Quaternion>& lifts, const GridSpec& grid,
                         const UnitQuaternion& target) {
  double best_dot = -1.0;
  std::size_t best = 0;
  for (std::size_t k = 0; k < lifts.size(); ++k) {
    const double d = std::fabs(dot4(lifts[k], target.quat()));
    if (d > best_dot) {
      best_dot = d;
      best = k;
    }
  }
  const int i = static_cast<int>(best / static_cast<std::size_t>(grid.nt()));
  const int j = static_cast<int>(best % static_cast<std::size_t>(grid.nt()));
  return {grid.s(i), grid.t(j), rotation_distance(UnitQuaternion::normalize(lifts[best]), target)};
}

}  // namespace

NearestSample nearest_grid_sample(const UnitQuaternion& target, const GridSpec& grid) {
  return nearest_in(lift_grid(HomotopyKind::DoubleTip, grid), grid, target);
}

VerificationReport verify_surjectivity(const GridSpec& grid, int n_targets, double tol,
                                       std::uint64_t seed) {
  if (n_targets < 1) throw InvalidInput("verify_surjectivity needs n_targets >= 1");
  const std::vector<Quaternion> lifts = lift_grid(HomotopyKind::DoubleTip, grid);
  SeededRng rng(seed);
  double worst = 0.0;
  double worst_phi = 0.0;
  double worst_theta = 0.0;
  for (int k = 0; k < n_targets; ++k) {
    // (-pi/2, pi/2] and [0, 2pi).
    const double axial = kHalfPi - std::numbers::pi * rng.uniform();
    const double angle = kTwoPi * rng.uniform();
    const UnitQuaternion target = from_axis_angle({std::cos(axial), 0.0, std::sin(axial)}, angle);
    const NearestSample nearest = nearest_in(lifts, grid, target);
    if (nearest.distance > worst) {
      worst = nearest.distance;
      worst_phi = axial;
      worst_theta = angle;
    }
  }
  VerificationReport report{"surjective", worst <= tol, worst, {}};
  report.details["ns"] = grid.ns();
  report.details["nt"] = grid.nt();
  report.details["targets"] = n_targets;
  report.details["seed"] = seed;
  report.details["tolerance"] = tol;
  report.details["worst_target"] = {{"phi", worst_phi}, {"theta", worst_theta}};
  return report;
}

PreimageClusters preimage_clusters(const Vec3& v, const Vec3& w, const GridSpec& grid,
                                   double tol) {
  if (std::fabs(norm(v) - 1.0) > kUnitTolerance || std::fabs(norm(w) - 1.0) > kUnitTolerance) {
    throw InvalidInput("preimage_clusters needs unit v and w");
  }
  if (angle_between(w, hinge(v)) < tol) {
    throw HingeDegeneracy("w is within the tolerance cone of hinge(v); its preimage is a circle");
  }
  const int ns = grid.ns();
  const int nt = grid.nt();
  const auto cells = static_cast<std::size_t>(grid.cells());
  std::vector<char> marked(cells, 0);
  for (int i = 0; i < ns; ++i) {
    for (int j = 0; j < nt; ++j) {
      const Vec3 image = evaluate(v, HomotopyKind::DoubleTip, grid.s(i), grid.t(j));
      marked[static_cast<std::size_t>(grid.index(i, j))] = angle_between(image, w) < tol;
    }
  }

  DisjointSets sets(cells);
  for (int i = 0; i < ns; ++i) {
    for (int j = 0; j < nt; ++j) {
      const auto a = static_cast<std::size_t>(grid.index(i, j));
      if (!marked[a]) continue;
      // Forward half of the 8-neighbourhood.
      const int offsets[4][2] = {{0, 1}, {1, -1}, {1, 0}, {1, 1}};
      for (const auto& off : offsets) {
        const int ni = i + off[0];
        const int nj = j + off[1];
        if (ni >= ns || nj < 0 || nj >= nt) continue;
        const auto b = static_cast<std::size_t>(grid.index(ni, nj));
        if (marked[b]) sets.unite(a, b);
      }
    }
  }

  std::vector<char> identity_root(cells, 0);
  if (grid.include_edges()) {
    // Q: the s = 0 edge wraps twice (t ~ t + pi) and the other three edges
    // collapse to the identity.
    const int half_turn = (nt - 1) / 2;
    for (int j = 0; j + half_turn < nt; ++j) {
      const auto a = static_cast<std::size_t>(grid.index(0, j));
      const auto b = static_cast<std::size_t>(grid.index(0, j + half_turn));
      if (marked[a] && marked[b]) sets.unite(a, b);
    }
    std::vector<std::size_t> edge_cells;
    for (int i = 0; i < ns; ++i) {
      edge_cells.push_back(static_cast<std::size_t>(grid.index(i, 0)));
      edge_cells.push_back(static_cast<std::size_t>(grid.index(i, nt - 1)));
    }
    for (int j = 0; j < nt; ++j) edge_cells.push_back(static_cast<std::size_t>(grid.index(ns - 1, j)));
    std::size_t anchor = cells;
    for (const std::size_t c : edge_cells) {
      if (!marked[c]) continue;
      if (anchor == cells) {
        anchor = c;
      } else {
        sets.unite(c, anchor);
      }
    }
    if (anchor != cells) identity_root[sets.find(anchor)] = 1;
  }

  PreimageClusters out;
  std::vector<char> seen(cells, 0);
  for (std::size_t c = 0; c < cells; ++c) {
    if (!marked[c]) continue;
    const std::size_t root = sets.find(c);
    if (seen[root]) continue;
    seen[root] = 1;
    if (identity_root[root]) {
      out.identity_cluster = true;
    } else {
      ++out.interior;
    }
  }
  return out;
}

VerificationReport verify_degree(int n_pairs, const GridSpec& grid, double tol, double hinge_cone,
                                 std::uint64_t seed) {
  if (n_pairs < 1) throw InvalidInput("verify_degree needs n_pairs >= 1");
  SeededRng rng(seed);
  int odd = 0;
  int worst_total = 1;
  nlohmann::ordered_json counts = nlohmann::ordered_json::array();
  for (int k = 0; k < n_pairs; ++k) {
    const Vec3 v = rng.unit_vector();
    Vec3 w = rng.unit_vector();
    while (angle_between(w, hinge(v)) < hinge_cone) w = rng.unit_vector();
    const int total = preimage_clusters(v, w, grid, tol).total();
    counts.push_back(total);
    if (total == 1) ++odd;
    if (std::abs(total - 1) > std::abs(worst_total - 1)) worst_total = total;
  }
  VerificationReport report{"degree", odd == n_pairs, static_cast<double>(n_pairs - odd), {}};
  report.details["pairs"] = n_pairs;
  report.details["single_cluster_pairs"] = odd;
  report.details["ns"] = grid.ns();
  report.details["nt"] = grid.nt();
  report.details["tolerance"] = tol;
  report.details["hinge_cone"] = hinge_cone;
  report.details["seed"] = seed;
  report.details["cluster_counts"] = std::move(counts);
  return report;
}

VerificationReport verify_every_which_way(const std::vector<HomotopyKind>& kinds, int n,
                                          double tol) {
  const std::vector<Vec3> points = fibonacci_sphere(n);
  double worst = 0.0;
  int failures = 0;
  nlohmann::ordered_json per_kind = nlohmann::ordered_json::object();
  for (const HomotopyKind kind : kinds) {
    double kind_worst = 0.0;
    int kind_failures = 0;
    for (const Vec3& v : points) {
      for (const Vec3& w : points) {
        try {
          kind_worst = std::max(kind_worst, solve_every_which_way(kind, v, w, tol).residual);
        } catch (const NotFound&) {
          ++kind_failures;
          kind_worst = std::numeric_limits<double>::infinity();
        }
      }
    }
    per_kind[std::string(to_string(kind))] = {{"worst_residual", kind_worst},
                                              {"failures", kind_failures}};
    worst = std::max(worst, kind_worst);
    failures += kind_failures;
  }
  VerificationReport report{"every-which-way", failures == 0 && worst <= tol, worst, {}};
  report.details["pairs_per_kind"] = n * n;
  report.details["tolerance"] = tol;
  report.details["kinds"] = std::move(per_kind);
  return report;
}

namespace {

constexpr int kMovieColumns = 9;  // s = k pi / 16, k = 0..8

double movie_s(int k) { return k == kMovieColumns - 1 ? kHalfPi : kHalfPi * k / (kMovieColumns - 1); }

}  // namespace

VerificationReport verify_thumb_counts(int nt, double tol) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  int mismatches = 0;
  for (int k = 0; k < kMovieColumns; ++k) {
    const int expected = k < 4 ? 2 : (k == 4 ? 1 : 0);
    const int got = antipode_visits(Landmark::Thumb, movie_s(k), nt, tol);
    if (got != expected) ++mismatches;
    rows.push_back({{"s", movie_s(k)}, {"visits", got}, {"expected", expected}});
  }
  VerificationReport report{"thumb-counts", mismatches == 0, static_cast<double>(mismatches), {}};
  report.details["nt"] = nt;
  report.details["tolerance"] = tol;
  report.details["columns"] = std::move(rows);
  return report;
}

VerificationReport verify_candle_once(int nt, double tol) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  int mismatches = 0;
  for (int k = 0; k < kMovieColumns; ++k) {
    const int expected = k == 4 ? 1 : 0;
    const int got = antipode_visits(Landmark::Candle, movie_s(k), nt, tol);
    if (got != expected) ++mismatches;
    rows.push_back({{"s", movie_s(k)}, {"visits", got}, {"expected", expected}});
  }
  // Where, over the whole rectangle, the candle is upside down.
  const ParamSolution where = solve_every_which_way(HomotopyKind::DoubleTip, kE3, -kE3, 1e-9);
  const double offset = std::hypot(where.s - std::numbers::pi / 4.0, where.t - std::numbers::pi);
  const double metric = std::max(static_cast<double>(mismatches), offset);
  VerificationReport report{"candle-once", mismatches == 0 && offset <= 1e-6, metric, {}};
  report.details["nt"] = nt;
  report.details["tolerance"] = tol;
  report.details["columns"] = std::move(rows);
  report.details["upside_down_at"] = {{"s", where.s}, {"t", where.t}, {"residual", where.residual}};
  return report;
}

}  // namespace untangle::analysis
