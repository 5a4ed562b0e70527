// Copyright 2026 The enlg Authors
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

namespace enlg {

// Rejected caller input: bad dimensions, malformed tables, unsupported sizes.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A mathematical invariant of a data type failed to hold.
class InvariantViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An SDP solve did not reach an acceptable optimum.
class SolverFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A repetition or enumeration would exceed the configured size cap.
class SizeCapExceeded : public std::runtime_error {
 public:
  SizeCapExceeded(const std::string& what, long double requested, long double cap)
      : std::runtime_error(what), requested_(requested), cap_(cap) {}
  long double requested() const { return requested_; }
  long double cap() const { return cap_; }

 private:
  long double requested_;
  long double cap_;
};

}  // namespace enlg
