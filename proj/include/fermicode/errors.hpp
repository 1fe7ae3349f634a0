// Copyright 2026 The fermicode Authors
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
#include <string_view>

namespace fermicode {

enum class ErrorCategory {
  kDimension,
  kParse,
  kRoute,
  kParity,
  kResource,
  kVerifyFail,
  kInvalidArgument,
};

/// Machine-readable name used by the CLI on stderr and in exit codes.
std::string_view category_name(ErrorCategory category);

class Error : public std::runtime_error {
 public:
  Error(ErrorCategory category, const std::string& what)
      : std::runtime_error(what), category_(category) {}

  ErrorCategory category() const { return category_; }

 private:
  ErrorCategory category_;
};

class DimensionError : public Error {
 public:
  explicit DimensionError(const std::string& what)
      : Error(ErrorCategory::kDimension, what) {}
};

class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what)
      : Error(ErrorCategory::kParse, what) {}
};

class RouteError : public Error {
 public:
  explicit RouteError(const std::string& what)
      : Error(ErrorCategory::kRoute, what) {}
};

class ParityError : public Error {
 public:
  explicit ParityError(const std::string& what)
      : Error(ErrorCategory::kParity, what) {}
};

class ResourceError : public Error {
 public:
  explicit ResourceError(const std::string& what)
      : Error(ErrorCategory::kResource, what) {}
};

class VerifyError : public Error {
 public:
  explicit VerifyError(const std::string& what)
      : Error(ErrorCategory::kVerifyFail, what) {}
};

class InvalidArgument : public Error {
 public:
  explicit InvalidArgument(const std::string& what)
      : Error(ErrorCategory::kInvalidArgument, what) {}
};

}  // namespace fermicode
