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

#include <iosfwd>

namespace fermicode {

/// Runs the command line tool. Errors are reported on `err` as
/// "error[<category>]: message" and mapped to exit codes: parse 2, route 3,
/// parity 4, resource 5, verify-fail 6, anything else 1.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace fermicode
