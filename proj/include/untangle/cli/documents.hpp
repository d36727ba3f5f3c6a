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

#include <string>
#include <vector>

#include "untangle/analysis/grid.hpp"
#include "untangle/analysis/probes.hpp"
#include "untangle/analysis/report.hpp"
#include "untangle/cli/json_text.hpp"
#include "untangle/nullhomotopy.hpp"

namespace untangle::cli {

// Default movie grid: 8 increments of s and of t, both ends included.
inline constexpr int kMovieSamples = 9;

// FramePose:
//   {kind, s, t, quaternion: [r,x,y,z], matrix: [9 row-major],
//    axis: [3] | null, angle, landmarks: {fingers, thumb, candle}}
// Landmarks are the matrix applied to -e1, e2, e3.
Json frame_pose(HomotopyKind kind, double s, double t);

// MovieGrid: {ns, nt, poses}. Poses are row-major with t down the rows and
// s across the columns: poses[j * ns + i] is (s_i, t_j).
Json movie_grid(HomotopyKind kind, int ns, int nt);

// {"D": MovieGrid, "FK": MovieGrid}.
Json compare_grids(int ns, int nt);

// {landmark, s, points: [[x,y,z], ...]}.
Json contrail_doc(const analysis::Contrail& trail);

// {ns, nt, raw: [[r,x,z], ...], folded: [[r,x,z], ...]}, row-major over s.
Json hemiviews_doc(const analysis::HemisphereViews& views);

// {ns, nt, s: [...], t: [...], phi: [[...]], theta: [[...]]}; phi[i][j] is
// null where the axis is undefined.
Json phi_theta_doc(int ns, int nt);

// CSV with header s,t,phi,theta; phi is empty where undefined.
std::string phi_theta_csv(int ns, int nt);

// {v, hinge, degenerate, axial_angles, fiber: [[r,x,y,z], ...]}.
Json hinge_doc(const analysis::HingeFiberSample& fiber);

Json report_doc(const analysis::VerificationReport& report);
Json reports_doc(const std::vector<analysis::VerificationReport>& reports);

}  // namespace untangle::cli
