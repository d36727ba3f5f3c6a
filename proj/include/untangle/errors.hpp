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

#include <stdexcept>
#include <string>

namespace untangle {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A precondition on an argument was violated (non-unit axis, parameter
// outside the homotopy rectangle, malformed grid, ...).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

// The rotation is within tolerance of the identity, so no axis exists.
class UndefinedAxis : public Error {
 public:
  using Error::Error;
};

// The request lands on an edge of the homotopy rectangle where the map is
// not one-to-one (identity edges or the double-twist edge).
class EdgeDegenerate : public Error {
 public:
  using Error::Error;
};

// The target vector lies in the tolerance cone around the hinge point,
// whose preimage is a circle rather than isolated points.
class HingeDegeneracy : public Error {
 public:
  using Error::Error;
};

// A search that is guaranteed to succeed did not.
class NotFound : public Error {
 public:
  using Error::Error;
};

// A bounded internal structure (hash bucket, grid cap) overflowed.
class ResourceExhausted : public Error {
 public:
  using Error::Error;
};

}  // namespace untangle
