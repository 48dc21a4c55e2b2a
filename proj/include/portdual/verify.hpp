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
 * Invariant suites for each module, run by `portdual verify`.
 */

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "portdual/serialize.hpp"

namespace portdual::verify {

/// One invariant: passes when value <= tolerance.
struct Check {
    std::string suite;
    std::string name;
    double value = 0.0;
    double tolerance = 0.0;
    bool pass = false;

    [[nodiscard]] double margin() const { return tolerance - value; }
};

struct Report {
    std::vector<Check> checks;
    [[nodiscard]] bool passed() const;
};

struct Config {
    std::optional<int> n;     ///< estimation calls; ports are n + 1
    std::optional<int> d;
    std::optional<int> n_max;
    std::optional<int> d_max;
    std::optional<double> tol; ///< replaces the floating-point tolerances
    std::size_t samples = 100000;
    std::uint64_t seed = 2026;
};

inline const std::vector<std::string> kSuites{"young", "repsym", "correspondence",
                                              "oracle", "inversion"};

/// `suite` is one of kSuites or "all"; throws std::invalid_argument otherwise.
[[nodiscard]] Report run(const std::string &suite, const Config &config);

[[nodiscard]] io::Json to_json(const Report &report);
[[nodiscard]] std::string to_csv(const Report &report);

} // namespace portdual::verify
