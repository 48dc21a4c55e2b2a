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
 * Young diagrams, standard tableaux and the two dimension formulas
 * (hook-length for symmetric-group irreps, hook-content for unitary-group
 * irreps).
 */

#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace portdual::young {

using BigInt = boost::multiprecision::cpp_int;

/**
 * @brief A partition of n drawn as rows of boxes.
 *
 * Rows are strictly positive and non-increasing. The empty diagram is a
 * valid value with zero boxes.
 */
class YoungDiagram {
  public:
    YoungDiagram() = default;

    /// Throws std::invalid_argument unless rows are positive and
    /// non-increasing.
    explicit YoungDiagram(std::vector<int> rows);

    [[nodiscard]] const std::vector<int> &rows() const { return rows_; }
    [[nodiscard]] int boxes() const { return boxes_; }
    [[nodiscard]] int depth() const { return static_cast<int>(rows_.size()); }
    [[nodiscard]] bool empty() const { return rows_.empty(); }

    /// Length of row i (0-based); zero past the last row.
    [[nodiscard]] int row(int i) const;
    /// Length of column j (0-based); zero past the first row.
    [[nodiscard]] int column(int j) const;
    /// Hook length of box (i, j), both 0-based.
    [[nodiscard]] int hook(int i, int j) const;

    /// Serialized form, e.g. "[2,1]" or "[]".
    [[nodiscard]] std::string to_string() const;

    // Plain lexicographic order on rows; used for map keys. The canonical
    // enumeration order is descending, see canonical_before().
    auto operator<=>(const YoungDiagram &) const = default;
    bool operator==(const YoungDiagram &) const = default;

  private:
    std::vector<int> rows_;
    int boxes_ = 0;
};

/// True if a precedes b in the canonical order (descending lexicographic).
[[nodiscard]] bool canonical_before(const YoungDiagram &a,
                                    const YoungDiagram &b);

/**
 * @brief Canonically ordered enumeration of all diagrams with n boxes and
 * depth at most d.
 */
class DiagramIndex {
  public:
    DiagramIndex() = default;
    DiagramIndex(int n, int d, std::vector<YoungDiagram> diagrams);

    [[nodiscard]] int n() const { return n_; }
    [[nodiscard]] int d() const { return d_; }
    [[nodiscard]] std::size_t size() const { return diagrams_.size(); }
    [[nodiscard]] const YoungDiagram &operator[](std::size_t i) const {
        return diagrams_[i];
    }
    [[nodiscard]] const std::vector<YoungDiagram> &diagrams() const {
        return diagrams_;
    }
    [[nodiscard]] auto begin() const { return diagrams_.begin(); }
    [[nodiscard]] auto end() const { return diagrams_.end(); }

    [[nodiscard]] std::optional<std::size_t>
    position(const YoungDiagram &alpha) const;

    /// Same (n, d) and same diagram list.
    bool operator==(const DiagramIndex &other) const {
        return n_ == other.n_ && d_ == other.d_ &&
               diagrams_ == other.diagrams_;
    }

  private:
    int n_ = 0;
    int d_ = 1;
    std::vector<YoungDiagram> diagrams_;
    std::map<YoungDiagram, std::size_t> lookup_;
};

/**
 * @brief A standard filling of a frame with labels 1..n.
 *
 * `rows[i][j]` is the label in box (i, j).
 */
struct Tableau {
    std::vector<std::vector<int>> rows;

    [[nodiscard]] int boxes() const;
    [[nodiscard]] YoungDiagram frame() const;
    /// (row, column) of a label, both 0-based.
    [[nodiscard]] std::pair<int, int> position(int label) const;
    /// column - row of the box holding `label`.
    [[nodiscard]] int content(int label) const;
    /// Labels read row by row, top to bottom.
    [[nodiscard]] std::vector<int> reading_word() const;
    /// The tableau with its largest label removed.
    [[nodiscard]] Tableau without_largest() const;

    auto operator<=>(const Tableau &) const = default;
    bool operator==(const Tableau &) const = default;
};

/**
 * @brief All standard tableaux of one frame, plus the add-a-box map.
 *
 * `addbox_map.at(mu)[a]` is the index in STab(mu) of the tableau obtained
 * by writing n+1 into the box mu / frame of tableau a. All indices are
 * 0-based.
 */
struct StandardTableauFamily {
    YoungDiagram frame;
    std::vector<Tableau> tableaux;
    std::map<YoungDiagram, std::vector<std::size_t>> addbox_map;

    [[nodiscard]] std::size_t size() const { return tableaux.size(); }
    [[nodiscard]] std::optional<std::size_t> index_of(const Tableau &t) const;
};

/// All partitions of n with at most d parts, canonically ordered.
[[nodiscard]] DiagramIndex enumerate_diagrams(int n, int d);

/// alpha + box, optionally restricted to depth <= depth_bound.
[[nodiscard]] std::vector<YoungDiagram>
add_box(const YoungDiagram &alpha,
        std::optional<int> depth_bound = std::nullopt);

/// alpha - box. Throws std::invalid_argument on the empty diagram.
[[nodiscard]] std::vector<YoungDiagram> remove_box(const YoungDiagram &alpha);

/// Number of standard tableaux, via the hook-length formula.
[[nodiscard]] BigInt mult(const YoungDiagram &alpha);

/// Dimension of the U(d) irrep, via the hook-content formula.
/// Throws std::invalid_argument if depth(alpha) > d.
[[nodiscard]] BigInt dim_u(const YoungDiagram &alpha, int d);

[[nodiscard]] double mult_real(const YoungDiagram &alpha);
[[nodiscard]] double dim_u_real(const YoungDiagram &alpha, int d);

[[nodiscard]] BigInt factorial(int n);

[[nodiscard]] StandardTableauFamily standard_tableaux(const YoungDiagram &alpha);

/// Exact check of sum_{mu in alpha+box} m_mu == (n+1) m_alpha.
[[nodiscard]] bool check_branching(const YoungDiagram &alpha);

} // namespace portdual::young
