// Copyright 2026 The qrf Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace qrf {

/// Input does not conform to the model, schema or operation preconditions.
class InvalidInput : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Malformed forest document or pairs file. `where()` names the offending
/// location (a JSON path or a line number).
class ParseError : public std::runtime_error {
  public:
    ParseError(std::string where, const std::string& what)
        : std::runtime_error(where + ": " + what), where_(std::move(where)) {}

    const std::string& where() const noexcept { return where_; }

  private:
    std::string where_;
};

/// y_max == y_min, so the normalized target is undefined.
class DegenerateRange : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

/// A metric whose denominator vanishes on the given pairs.
class DegenerateDenominator : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

/// The requested simulation does not fit the simulator's limits.
class ResourceError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

}  // namespace qrf
