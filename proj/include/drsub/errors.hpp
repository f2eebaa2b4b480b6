// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DRSUB_ERRORS_HPP
#define DRSUB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace drsub {

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Two lattice points of different lengths were combined.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// A point or step left the feasible box [0, B].
class BoundsError : public Error {
 public:
  using Error::Error;
};

// An instance or strategy document violates the schema.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Invalid generator or harness parameters.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// A resource guard refused the operation (e.g. box too large to enumerate).
class GuardError : public Error {
 public:
  using Error::Error;
};

// The solver witnessed behavior impossible for a DR-submodular oracle.
class DrViolationError : public Error {
 public:
  using Error::Error;
};

}  // namespace drsub

#endif  // DRSUB_ERRORS_HPP
