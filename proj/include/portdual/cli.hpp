// Copyright 2026 The portdual Authors.

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


/**
 * @file
 * Command-line front end. Exit codes: 0 ok, 1 verification failure,
 * 2 usage error, 3 numerical failure.
 */

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace portdual::cli {

enum ExitCode : int {
    kOk = 0,
    kVerificationFailure = 1,
    kUsageError = 2,
    kNumericalFailure = 3,
};

/// Runs one command; `args` excludes the program name.
int run(const std::vector<std::string> &args, std::ostream &out,
        std::ostream &err);

int run(int argc, const char *const *argv, std::ostream &out,
        std::ostream &err);

/// "5", "2,3,7", "10:100" or "10:100:10" (inclusive).
[[nodiscard]] std::vector<int> parse_int_list(const std::string &text);

} // namespace portdual::cli
