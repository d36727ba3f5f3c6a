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

#include "untangle/cli/documents.hpp"

#include <cstdio>

#include "untangle/analysis/probes.hpp"
#include "untangle/errors.hpp"
#include "untangle/rotation.hpp"

namespace untangle::cli {
namespace {

Json vec_json(const Vec3& v) { return Json::array({v.x, v.y, v.z}); }

void check_grid_size(int ns, int nt) {
  // Reuses the cap and the ns, nt >= 2 checks.
  (void)analysis::GridSpec(ns, nt);
}

}  // namespace

Json frame_pose(HomotopyKind kind, double s, double t) {
  const HomotopySample smp = sample(kind, s, t);
  Json matrix = Json::array();
  for (const double m : smp.matrix.row_major()) matrix.push_back(m);
  const auto& q = smp.q.quat();

  Json pose;
  pose["kind"] = std::string(to_string(kind));
  pose["s"] = smp.params.s();
  pose["t"] = smp.params.t();
  pose["quaternion"] = Json::array({q.r, q.x, q.y, q.z});
  pose["matrix"] = std::move(matrix);
  pose["axis"] = smp.axis_angle.axis_defined ? vec_json(smp.axis_angle.axis) : Json(nullptr);
  pose["angle"] = smp.axis_angle.angle;
  pose["landmarks"] = {
      {"fingers", vec_json(smp.matrix * analysis::landmark_vector(analysis::Landmark::Fingers))},
      {"thumb", vec_json(smp.matrix * analysis::landmark_vector(analysis::Landmark::Thumb))},
      {"candle", vec_json(smp.matrix * analysis::landmark_vector(analysis::Landmark::Candle))}};
  return pose;
}

Json movie_grid(HomotopyKind kind, int ns, int nt) {
  check_grid_size(ns, nt);
  const analysis::GridSpec grid(ns, nt);
  Json poses = Json::array();
  for (int j = 0; j < nt; ++j) {
    for (int i = 0; i < ns; ++i) poses.push_back(frame_pose(kind, grid.s(i), grid.t(j)));
  }
  Json doc;
  doc["ns"] = ns;
  doc["nt"] = nt;
  doc["poses"] = std::move(poses);
  return doc;
}

Json compare_grids(int ns, int nt) {
  Json doc;
  doc["D"] = movie_grid(HomotopyKind::DoubleTip, ns, nt);
  doc["FK"] = movie_grid(HomotopyKind::FK, ns, nt);
  return doc;
}

Json contrail_doc(const analysis::Contrail& trail) {
  Json points = Json::array();
  for (const Vec3& p : trail.points) points.push_back(vec_json(p));
  Json doc;
  doc["landmark"] = std::string(analysis::to_string(trail.landmark));
  doc["s"] = trail.s;
  doc["points"] = std::move(points);
  return doc;
}

Json hemiviews_doc(const analysis::HemisphereViews& views) {
  const auto points = [](const std::vector<analysis::HemiPoint>& src) {
    Json out = Json::array();
    for (const auto& p : src) out.push_back(Json::array({p.r, p.x, p.z}));
    return out;
  };
  Json doc;
  doc["ns"] = views.grid.ns();
  doc["nt"] = views.grid.nt();
  doc["raw"] = points(views.raw);
  doc["folded"] = points(views.folded);
  return doc;
}

Json phi_theta_doc(int ns, int nt) {
  check_grid_size(ns, nt);
  const analysis::GridSpec grid(ns, nt);
  Json s_values = Json::array();
  Json t_values = Json::array();
  Json phi_rows = Json::array();
  Json theta_rows = Json::array();
  for (int i = 0; i < ns; ++i) s_values.push_back(grid.s(i));
  for (int j = 0; j < nt; ++j) t_values.push_back(grid.t(j));
  for (int i = 0; i < ns; ++i) {
    Json phi_row = Json::array();
    Json theta_row = Json::array();
    for (int j = 0; j < nt; ++j) {
      const HomotopySample smp = sample(HomotopyKind::DoubleTip, grid.s(i), grid.t(j));
      phi_row.push_back(smp.phi ? Json(*smp.phi) : Json(nullptr));
      theta_row.push_back(smp.theta);
    }
    phi_rows.push_back(std::move(phi_row));
    theta_rows.push_back(std::move(theta_row));
  }
  Json doc;
  doc["ns"] = ns;
  doc["nt"] = nt;
  doc["s"] = std::move(s_values);
  doc["t"] = std::move(t_values);
  doc["phi"] = std::move(phi_rows);
  doc["theta"] = std::move(theta_rows);
  return doc;
}

std::string phi_theta_csv(int ns, int nt) {
  check_grid_size(ns, nt);
  const analysis::GridSpec grid(ns, nt);
  std::string out = "s,t,phi,theta\n";
  char buf[128];
  for (int i = 0; i < ns; ++i) {
    for (int j = 0; j < nt; ++j) {
      const HomotopySample smp = sample(HomotopyKind::DoubleTip, grid.s(i), grid.t(j));
      std::snprintf(buf, sizeof buf, "%.17g,%.17g,", smp.params.s(), smp.params.t());
      out += buf;
      if (smp.phi) {
        std::snprintf(buf, sizeof buf, "%.17g", *smp.phi);
        out += buf;
      }
      std::snprintf(buf, sizeof buf, ",%.17g\n", smp.theta);
      out += buf;
    }
  }
  return out;
}

Json hinge_doc(const analysis::HingeFiberSample& fiber) {
  Json rotations = Json::array();
  for (const UnitQuaternion& q : fiber.rotations) {
    rotations.push_back(Json::array({q.r(), q.x(), q.y(), q.z()}));
  }
  Json doc;
  doc["v"] = vec_json(fiber.v);
  doc["hinge"] = vec_json(fiber.target);
  doc["degenerate"] = fiber.degenerate;
  doc["axial_angles"] = fiber.axial_angles;
  doc["fiber"] = std::move(rotations);
  return doc;
}

Json report_doc(const analysis::VerificationReport& report) {
  Json doc;
  doc["check_name"] = report.check_name;
  doc["passed"] = report.passed;
  doc["metric"] = report.metric;
  doc["details"] = report.details;
  return doc;
}

Json reports_doc(const std::vector<analysis::VerificationReport>& reports) {
  Json out = Json::array();
  for (const auto& r : reports) out.push_back(report_doc(r));
  return out;
}

}  // namespace untangle::cli
