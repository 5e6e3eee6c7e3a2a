// Copyright 2026 The ffv Authors
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

#ifndef FFV_ERROR_HPP_
#define FFV_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace ffv {

// Raised when inputs violate a documented precondition or type invariant.
class ValidationError : public std::invalid_argument {
 public:
  explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

// Raised when a serialized vault or set description fails schema checks.
class FormatError : public ValidationError {
 public:
  explicit FormatError(const std::string& what) : ValidationError(what) {}
};

// Raised when a file cannot be read or written.
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ffv

#endif  // FFV_ERROR_HPP_
