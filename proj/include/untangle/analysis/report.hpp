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

#include <json.hpp>

namespace untangle::analysis {

// Outcome of one numerical check. `metric` is the worst residual or the
// relevant count; `details` carries check-specific structured notes.
struct VerificationReport {
  std::string check_name;
  bool passed = false;
  double metric = 0.0;
  nlohmann::ordered_json details = nlohmann::ordered_json::object();
};

}  // namespace untangle::analysis
