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

#include "portdual/young.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace portdual::young {

YoungDiagram::YoungDiagram(std::vector<int> rows) : rows_(std::move(rows)) {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (rows_[i] <= 0) {
            throw std::invalid_argument("YoungDiagram: rows must be positive");
        }
        if (i > 0 && rows_[i] > rows_[i - 1]) {
            throw std::invalid_argument(
                "YoungDiagram: rows must be non-increasing");
        }
        boxes_ += rows_[i];
    }
}

int YoungDiagram::row(int i) const {
    return (i >= 0 && i < depth()) ? rows_[static_cast<std::size_t>(i)] : 0;
}

int YoungDiagram::column(int j) const {
    int len = 0;
    while (len < depth() && rows_[static_cast<std::size_t>(len)] > j) {
        ++len;
    }
    return len;
}

int YoungDiagram::hook(int i, int j) const {
    return row(i) + column(j) - i - j - 1;
}

std::string YoungDiagram::to_string() const {
    std::string out = "[";
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (i > 0) {
            out += ',';
        }
        out += std::to_string(rows_[i]);
    }
    out += ']';
    return out;
}

bool canonical_before(const YoungDiagram &a, const YoungDiagram &b) {
    return std::lexicographical_compare(b.rows().begin(), b.rows().end(),
                                        a.rows().begin(), a.rows().end());
}

DiagramIndex::DiagramIndex(int n, int d, std::vector<YoungDiagram> diagrams)
    : n_(n), d_(d), diagrams_(std::move(diagrams)) {
    for (std::size_t i = 0; i < diagrams_.size(); ++i) {
        if (diagrams_[i].boxes() != n || diagrams_[i].depth() > d) {
            throw std::invalid_argument(
                "DiagramIndex: diagram outside the (n, d) family");
        }
        if (!lookup_.emplace(diagrams_[i], i).second) {
            throw std::invalid_argument("DiagramIndex: duplicate diagram");
        }
    }
}

std::optional<std::size_t>
DiagramIndex::position(const YoungDiagram &alpha) const {
    auto it = lookup_.find(alpha);
    if (it == lookup_.end()) {
        return std::nullopt;
    }
    return it->second;
}

int Tableau::boxes() const {
    int count = 0;
    for (const auto &r : rows) {
        count += static_cast<int>(r.size());
    }
    return count;
}

YoungDiagram Tableau::frame() const {
    std::vector<int> shape;
    shape.reserve(rows.size());
    for (const auto &r : rows) {
        shape.push_back(static_cast<int>(r.size()));
    }
    return YoungDiagram(std::move(shape));
}

std::pair<int, int> Tableau::position(int label) const {
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < rows[i].size(); ++j) {
            if (rows[i][j] == label) {
                return {static_cast<int>(i), static_cast<int>(j)};
            }
        }
    }
    throw std::out_of_range("Tableau: label not present");
}

int Tableau::content(int label) const {
    auto [i, j] = position(label);
    return j - i;
}

std::vector<int> Tableau::reading_word() const {
    std::vector<int> word;
    for (const auto &r : rows) {
        word.insert(word.end(), r.begin(), r.end());
    }
    return word;
}

Tableau Tableau::without_largest() const {
    const int n = boxes();
    Tableau out = *this;
    auto [i, j] = position(n);
    auto &r = out.rows[static_cast<std::size_t>(i)];
    r.erase(r.begin() + j);
    if (r.empty()) {
        out.rows.erase(out.rows.begin() + i);
    }
    return out;
}

std::optional<std::size_t>
StandardTableauFamily::index_of(const Tableau &t) const {
    auto it = std::lower_bound(
        tableaux.begin(), tableaux.end(), t,
        [](const Tableau &x, const Tableau &y) {
            return x.reading_word() < y.reading_word();
        });
    if (it == tableaux.end() || !(*it == t)) {
        return std::nullopt;
    }
    return static_cast<std::size_t>(it - tableaux.begin());
}

DiagramIndex enumerate_diagrams(int n, int d) {
    if (n < 0 || d < 1) {
        throw std::invalid_argument("enumerate_diagrams: need n >= 0, d >= 1");
    }
    std::vector<YoungDiagram> out;
    std::vector<int> prefix;
    // Largest first part first gives descending lexicographic order.
    std::function<void(int, int)> rec = [&](int remaining, int max_part) {
        if (remaining == 0) {
            out.emplace_back(prefix);
            return;
        }
        if (static_cast<int>(prefix.size()) == d) {
            return;
        }
        for (int part = std::min(remaining, max_part); part >= 1; --part) {
            prefix.push_back(part);
            rec(remaining - part, part);
            prefix.pop_back();
        }
    };
    rec(n, n);
    return DiagramIndex(n, d, std::move(out));
}

std::vector<YoungDiagram> add_box(const YoungDiagram &alpha,
                                  std::optional<int> depth_bound) {
    std::vector<YoungDiagram> out;
    const auto &rows = alpha.rows();
    for (int i = 0; i <= alpha.depth(); ++i) {
        if (i > 0 && alpha.row(i - 1) < alpha.row(i) + 1) {
            continue;
        }
        std::vector<int> next = rows;
        if (i == alpha.depth()) {
            if (depth_bound && alpha.depth() + 1 > *depth_bound) {
                continue;
            }
            next.push_back(1);
        } else {
            ++next[static_cast<std::size_t>(i)];
        }
        out.emplace_back(std::move(next));
    }
    return out;
}

std::vector<YoungDiagram> remove_box(const YoungDiagram &alpha) {
    if (alpha.empty()) {
        throw std::invalid_argument("remove_box: empty diagram has no corner");
    }
    std::vector<YoungDiagram> out;
    for (int i = 0; i < alpha.depth(); ++i) {
        if (alpha.row(i) - 1 < alpha.row(i + 1)) {
            continue;
        }
        std::vector<int> next = alpha.rows();
        if (--next[static_cast<std::size_t>(i)] == 0) {
            next.pop_back();
        }
        out.emplace_back(std::move(next));
    }
    return out;
}

BigInt factorial(int n) {
    BigInt out = 1;
    for (int k = 2; k <= n; ++k) {
        out *= k;
    }
    return out;
}

BigInt mult(const YoungDiagram &alpha) {
    BigInt hooks = 1;
    for (int i = 0; i < alpha.depth(); ++i) {
        for (int j = 0; j < alpha.row(i); ++j) {
            hooks *= alpha.hook(i, j);
        }
    }
    return factorial(alpha.boxes()) / hooks;
}

BigInt dim_u(const YoungDiagram &alpha, int d) {
    if (alpha.depth() > d) {
        throw std::invalid_argument("dim_u: depth exceeds dimension");
    }
    BigInt num = 1;
    BigInt den = 1;
    for (int i = 0; i < alpha.depth(); ++i) {
        for (int j = 0; j < alpha.row(i); ++j) {
            num *= d + j - i;
            den *= alpha.hook(i, j);
        }
    }
    return num / den;
}

double mult_real(const YoungDiagram &alpha) {
    return mult(alpha).convert_to<double>();
}

double dim_u_real(const YoungDiagram &alpha, int d) {
    return dim_u(alpha, d).convert_to<double>();
}

namespace {

std::vector<Tableau> tableaux_of(const YoungDiagram &alpha) {
    if (alpha.empty()) {
        return {Tableau{}};
    }
    const int n = alpha.boxes();
    std::vector<Tableau> out;
    for (const auto &lambda : remove_box(alpha)) {
        // the box alpha / lambda receives label n
        int corner_row = 0;
        while (lambda.row(corner_row) == alpha.row(corner_row)) {
            ++corner_row;
        }
        for (Tableau t : tableaux_of(lambda)) {
            if (corner_row == static_cast<int>(t.rows.size())) {
                t.rows.emplace_back();
            }
            t.rows[static_cast<std::size_t>(corner_row)].push_back(n);
            out.push_back(std::move(t));
        }
    }
    std::sort(out.begin(), out.end(), [](const Tableau &x, const Tableau &y) {
        return x.reading_word() < y.reading_word();
    });
    return out;
}

} // namespace

StandardTableauFamily standard_tableaux(const YoungDiagram &alpha) {
    StandardTableauFamily family;
    family.frame = alpha;
    family.tableaux = tableaux_of(alpha);
    const int label = alpha.boxes() + 1;
    for (const auto &mu : add_box(alpha)) {
        int new_row = 0;
        while (mu.row(new_row) == alpha.row(new_row)) {
            ++new_row;
        }
        StandardTableauFamily target;
        target.frame = mu;
        target.tableaux = tableaux_of(mu);
        std::vector<std::size_t> map;
        map.reserve(family.tableaux.size());
        for (Tableau t : family.tableaux) {
            if (new_row == static_cast<int>(t.rows.size())) {
                t.rows.emplace_back();
            }
            t.rows[static_cast<std::size_t>(new_row)].push_back(label);
            map.push_back(target.index_of(t).value());
        }
        family.addbox_map.emplace(mu, std::move(map));
    }
    return family;
}

bool check_branching(const YoungDiagram &alpha) {
    BigInt total = 0;
    for (const auto &mu : add_box(alpha)) {
        total += mult(mu);
    }
    return total == BigInt(alpha.boxes() + 1) * mult(alpha);
}

} // namespace portdual::young
