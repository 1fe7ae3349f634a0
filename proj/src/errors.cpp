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

#include "fermicode/errors.hpp"

namespace fermicode {

std::string_view category_name(ErrorCategory category) {
  switch (category) {
    case ErrorCategory::kDimension:
      return "dimension";
    case ErrorCategory::kParse:
      return "parse";
    case ErrorCategory::kRoute:
      return "route";
    case ErrorCategory::kParity:
      return "parity";
    case ErrorCategory::kResource:
      return "resource";
    case ErrorCategory::kVerifyFail:
      return "verify-fail";
    case ErrorCategory::kInvalidArgument:
      return "invalid-argument";
  }
  return "unknown";
}

}  // namespace fermicode
