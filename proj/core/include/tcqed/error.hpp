// Copyright 2026 The tcqed Authors
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

#ifndef TCQED_ERROR_HPP_
#define TCQED_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace tcqed {

/// Invalid user input: bad parameter ranges, malformed config, unknown names.
class ConfigError : public std::invalid_argument {
 public:
  explicit ConfigError(const std::string& what) : std::invalid_argument(what) {}
};

/// A numerical contract was broken (non-PSD density, non-unit norm, ...).
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

/// The truncated Fock space is not large enough for the requested problem.
class ResourceError : public NumericalError {
 public:
  explicit ResourceError(const std::string& what) : NumericalError(what) {}
};

class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace tcqed

#endif  // TCQED_ERROR_HPP_
