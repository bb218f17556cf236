// Copyright 2026 The argsum Authors.
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

#ifndef ARGSUM_ERROR_H_
#define ARGSUM_ERROR_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace argsum {

// Broad failure classes. The CLI maps each to its own exit code.
enum class ErrorKind {
  kInvalidArgument,
  kParse,
  kValidation,
  kConfiguration,
  kResource,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string &message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

// Precondition violated by a caller (length mismatch, empty input, ...).
class InvalidArgument : public Error {
 public:
  explicit InvalidArgument(const std::string &message)
      : Error(ErrorKind::kInvalidArgument, message) {}
};

// Malformed input record. `line` is 1-based; 0 when unknown.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string &message)
      : Error(ErrorKind::kParse,
              line > 0 ? "line " + std::to_string(line) + ": " + message
                       : message),
        line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Well-formed input that breaks a data invariant.
class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string &message)
      : Error(ErrorKind::kValidation, message) {}
};

class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string &message)
      : Error(ErrorKind::kConfiguration, message) {}
};

// A file or resource could not be opened or read.
class ResourceError : public Error {
 public:
  explicit ResourceError(const std::string &message)
      : Error(ErrorKind::kResource, message) {}
};

}  // namespace argsum

#endif  // ARGSUM_ERROR_H_
