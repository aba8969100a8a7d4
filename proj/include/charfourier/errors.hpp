// Copyright 2026 The charfourier Authors. All Rights Reserved.
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

namespace charfourier {

// Non-finite or otherwise meaningless numeric argument (e.g. from_angle(NaN)).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// Caller-supplied parameter violates a documented precondition: aliasing
// bounds, shape mismatches, out-of-box frequencies, bad configuration.
class ParameterError : public std::invalid_argument {
 public:
  explicit ParameterError(const std::string& what)
      : std::invalid_argument(what) {}
};

// Input data violates the unit-circle invariant beyond tolerance.
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace charfourier
