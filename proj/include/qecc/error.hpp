// Copyright 2026 The qecc Authors
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

#ifndef QECC_ERROR_HPP
#define QECC_ERROR_HPP

#include <stdexcept>
#include <string>

namespace qecc {

/// Invalid input: bad config keys, inconsistent sizes, malformed graphs.
/// Maps to exit code 1 at the CLI boundary.
class ConfigError : public std::invalid_argument {
 public:
  explicit ConfigError(const std::string& what) : std::invalid_argument(what) {}
};

/// A numerical routine failed to reach its requested accuracy, or a
/// numerical precondition (e.g. orthonormality of an error basis) does not
/// hold. Maps to exit code 2.
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace qecc

#endif  // QECC_ERROR_HPP
