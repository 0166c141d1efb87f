// Copyright 2026 The choqdist Authors.
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
#include <string>

namespace choqdist::cli {

/// Runs one command line. Returns 0 on success, 1 on a validation failure
/// and 2 on a parse error; diagnostics go to `err` as
/// "error:<category>:<message>".
int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err);

/// Locale-independent rendering with 12 significant digits.
std::string format_number(double x);

}  // namespace choqdist::cli
