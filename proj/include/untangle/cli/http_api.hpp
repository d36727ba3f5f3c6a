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

#include <map>
#include <string>

#include "untangle/nullhomotopy.hpp"

namespace httplib {
class Server;
}

namespace untangle::cli {

struct HttpResponse {
  int status = 200;
  std::string body;
  std::string content_type = "application/json";
};

using QueryParams = std::map<std::string, std::string>;

// Stateless GET handler for the explorer backend:
//   /frame?kind&s&t            FramePose
//   /contrail?landmark&s&n     Contrail (n defaults to 256)
//   /grid?kind&ns&nt           MovieGrid (defaults 9 x 9)
//   /phi-theta?ns&nt           phi/theta surfaces (defaults 65 x 65)
//   /hinge?vx&vy&vz&n          hinge point and its fiber (n defaults 64)
// Bad parameters give 400, unknown paths 404; errors carry {"error": msg}.
// Identical inputs give byte-identical bodies.
HttpResponse handle_request(const std::string& path, const QueryParams& params,
                            HomotopyKind default_kind);

// Routes every GET through handle_request.
void install_routes(httplib::Server& server, HomotopyKind default_kind);

// Blocks serving on host:port. Returns false if the socket cannot be bound.
bool serve(const std::string& host, int port, HomotopyKind default_kind);

}  // namespace untangle::cli
