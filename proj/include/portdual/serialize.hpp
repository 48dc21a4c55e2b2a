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
 * JSON and CSV forms of every result type. Floats carry 12 significant
 * digits; exact integers are written as integers.
 */

#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "portdual/correspondence.hpp"
#include "portdual/inversion.hpp"
#include "portdual/oracle.hpp"

namespace portdual::io {

using Json = nlohmann::ordered_json;

/// x rounded to 12 significant digits.
[[nodiscard]] double round12(double x);
/// %.12g text of x.
[[nodiscard]] std::string format12(double x);

/// RFC-4180 field: quoted when it holds a comma, quote or line break.
[[nodiscard]] std::string csv_field(const std::string &text);
[[nodiscard]] std::string csv_row(const std::vector<std::string> &fields);

[[nodiscard]] Json to_json(const young::YoungDiagram &alpha);
[[nodiscard]] Json to_json(const young::DiagramIndex &index);
[[nodiscard]] Json to_json(const correspondence::CoefficientVector &x);
[[nodiscard]] Json to_json(const correspondence::FidelityMatrix &m);
[[nodiscard]] Json to_json(const correspondence::SpectralResult &r);
[[nodiscard]] Json to_json(const oracle::OracleReport &r);
[[nodiscard]] Json to_json(const inversion::FeasibilityReport &r);

/// Header of serialized diagrams, then one row per diagram. `exact`
/// writes the integer counts d^2 M instead of M.
[[nodiscard]] std::string to_csv(const correspondence::FidelityMatrix &m,
                                 bool exact);

/**
 * @brief Reads a coefficient vector over Y^d_n.
 *
 * Accepts a plain array of values or an object with "values" and an
 * optional "index" that must equal the canonical one. Negative entries
 * and index mismatches throw std::invalid_argument.
 */
[[nodiscard]] correspondence::CoefficientVector
parse_vector(const Json &doc, correspondence::Role role, int n, int d);

} // namespace portdual::io
