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

#include "untangle/cli/http_api.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <string_view>

#include <httplib.h>

#include "untangle/analysis/probes.hpp"
#include "untangle/cli/documents.hpp"
#include "untangle/errors.hpp"

namespace untangle::cli {
namespace {

constexpr int kMaxPolylinePoints = 65'536;
constexpr std::int64_t kMaxGridCells = 1'048'576;

class BadRequest : public Error {
 public:
  using Error::Error;
};

struct UnknownEndpoint {};

const std::string* find(const QueryParams& params, const std::string& key) {
  const auto it = params.find(key);
  return it == params.end() ? nullptr : &it->second;
}

double number_param(const QueryParams& params, const std::string& key) {
  const std::string* raw = find(params, key);
  if (raw == nullptr) throw BadRequest("missing parameter '" + key + "'");
  double value = 0.0;
  const auto [end, ec] = std::from_chars(raw->data(), raw->data() + raw->size(), value);
  if (ec != std::errc{} || end != raw->data() + raw->size() || !std::isfinite(value)) {
    throw BadRequest("parameter '" + key + "' is not a number: '" + *raw + "'");
  }
  return value;
}

// Query strings carry rounded decimals (s=1.5708 for pi/2), so values just
// outside [0, hi] snap onto the edge; anything further out is rejected.
double domain_param(const QueryParams& params, const std::string& key, double hi) {
  constexpr double kQuerySlack = 1e-3;
  const double value = number_param(params, key);
  if (value < -kQuerySlack || value > hi + kQuerySlack) {
    throw BadRequest("parameter '" + key + "' is outside [0, " + std::to_string(hi) + "]");
  }
  return std::clamp(value, 0.0, hi);
}

int int_param(const QueryParams& params, const std::string& key, int fallback, int lo, int hi) {
  const std::string* raw = find(params, key);
  if (raw == nullptr) return fallback;
  int value = 0;
  const auto [end, ec] = std::from_chars(raw->data(), raw->data() + raw->size(), value);
  if (ec != std::errc{} || end != raw->data() + raw->size()) {
    throw BadRequest("parameter '" + key + "' is not an integer: '" + *raw + "'");
  }
  if (value < lo || value > hi) {
    throw BadRequest("parameter '" + key + "' must be in [" + std::to_string(lo) + ", " +
                     std::to_string(hi) + "]");
  }
  return value;
}

HomotopyKind kind_param(const QueryParams& params, HomotopyKind fallback) {
  const std::string* raw = find(params, "kind");
  return raw == nullptr ? fallback : parse_homotopy_kind(*raw);
}

void check_cells(int ns, int nt) {
  if (static_cast<std::int64_t>(ns) * nt > kMaxGridCells) {
    throw BadRequest("grid too large for one response");
  }
}

HttpResponse error_response(int status, const std::string& message) {
  return {status, to_json_text(Json{{"error", message}}), "application/json"};
}

Json dispatch(const std::string& path, const QueryParams& params, HomotopyKind default_kind) {
  if (path == "/frame") {
    return frame_pose(kind_param(params, default_kind), domain_param(params, "s", kHalfPi),
                      domain_param(params, "t", kTwoPi));
  }
  if (path == "/contrail") {
    const std::string* name = find(params, "landmark");
    if (name == nullptr) throw BadRequest("missing parameter 'landmark'");
    const int n = int_param(params, "n", 256, 2, kMaxPolylinePoints);
    return contrail_doc(
        analysis::contrail(analysis::parse_landmark(*name), domain_param(params, "s", kHalfPi), n));
  }
  if (path == "/grid") {
    const int ns = int_param(params, "ns", kMovieSamples, 2, kMaxPolylinePoints);
    const int nt = int_param(params, "nt", kMovieSamples, 2, kMaxPolylinePoints);
    check_cells(ns, nt);
    return movie_grid(kind_param(params, default_kind), ns, nt);
  }
  if (path == "/phi-theta") {
    const int ns = int_param(params, "ns", 65, 2, kMaxPolylinePoints);
    const int nt = int_param(params, "nt", 65, 2, kMaxPolylinePoints);
    check_cells(ns, nt);
    return phi_theta_doc(ns, nt);
  }
  if (path == "/hinge") {
    const Vec3 v{number_param(params, "vx"), number_param(params, "vy"), number_param(params, "vz")};
    const double len = norm(v);
    if (!(len > 0.0)) throw BadRequest("hinge needs a nonzero vector");
    const int n = int_param(params, "n", 64, 3, kMaxPolylinePoints);
    return hinge_doc(analysis::hinge_fiber(v / len, n));
  }
  throw UnknownEndpoint{};
}

}  // namespace

HttpResponse handle_request(const std::string& path, const QueryParams& params,
                            HomotopyKind default_kind) {
  try {
    return {200, to_json_text(dispatch(path, params, default_kind)), "application/json"};
  } catch (const UnknownEndpoint&) {
    return error_response(404, "no such endpoint: " + path);
  } catch (const Error& e) {
    return error_response(400, e.what());
  }
}

void install_routes(httplib::Server& server, HomotopyKind default_kind) {
  server.Get(R"(/.*)", [default_kind](const httplib::Request& req, httplib::Response& res) {
    QueryParams params;
    for (const auto& [key, value] : req.params) params.emplace(key, value);
    const HttpResponse out = handle_request(req.path, params, default_kind);
    res.status = out.status;
    res.set_content(out.body, out.content_type);
  });
}

bool serve(const std::string& host, int port, HomotopyKind default_kind) {
  httplib::Server server;
  // Plain SO_REUSEADDR: a port held by another server must fail to bind
  // (httplib's default adds SO_REUSEPORT, which lets both listen).
  server.set_socket_options([](socket_t sock) {
    int yes = 1;
    setsockopt(sock, SOL_SOCKET, SO_REUSEADDR, reinterpret_cast<const char*>(&yes), sizeof(yes));
  });
  install_routes(server, default_kind);
  if (!server.bind_to_port(host, port)) return false;
  return server.listen_after_bind();
}

}  // namespace untangle::cli
