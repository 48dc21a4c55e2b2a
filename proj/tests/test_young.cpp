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

#include <algorithm>
#include <set>

#include "doctest.h"

#include "portdual/young.hpp"

using namespace portdual::young;

namespace {

YoungDiagram Y(std::vector<int> rows) { return YoungDiagram(std::move(rows)); }

// Partitions of n into at most k parts with largest part at most m.
long count_partitions(int n, int k, int m) {
    if (n == 0) {
        return 1;
    }
    if (k == 0) {
        return 0;
    }
    long total = 0;
    for (int first = std::min(n, m); first >= 1; --first) {
        total += count_partitions(n - first, k - 1, first);
    }
    return total;
}

bool is_standard(const Tableau &t) {
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
        for (std::size_t j = 0; j < t.rows[i].size(); ++j) {
            if (j > 0 && t.rows[i][j] <= t.rows[i][j - 1]) {
                return false;
            }
            if (i > 0 && t.rows[i][j] <= t.rows[i - 1][j]) {
                return false;
            }
        }
    }
    return true;
}

} // namespace

TEST_CASE("YoungDiagram validation") {
    CHECK_THROWS_AS(Y({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Y({2, 0}), std::invalid_argument);
    CHECK(Y({}).boxes() == 0);
    CHECK(Y({}).empty());
    CHECK(Y({3, 1}).boxes() == 4);
    CHECK(Y({2, 1}).to_string() == "[2,1]");
    CHECK(Y({}).to_string() == "[]");
    CHECK(Y({3, 1}).column(0) == 2);
    CHECK(Y({3, 1}).hook(0, 0) == 4);
}

TEST_CASE("enumerate_diagrams") {
    auto e0 = enumerate_diagrams(0, 3);
    REQUIRE(e0.size() == 1);
    CHECK(e0[0].empty());

    auto e22 = enumerate_diagrams(2, 2);
    REQUIRE(e22.size() == 2);
    CHECK(e22[0] == Y({2}));
    CHECK(e22[1] == Y({1, 1}));

    auto e32 = enumerate_diagrams(3, 2);
    REQUIRE(e32.size() == 2);
    CHECK(e32[0] == Y({3}));
    CHECK(e32[1] == Y({2, 1}));

    CHECK(e32.position(Y({2, 1})) == 1u);
    CHECK_FALSE(e32.position(Y({1, 1, 1})).has_value());
}

TEST_CASE("enumerate_diagrams sizes match a recursive partition counter") {
    for (int n = 0; n <= 14; ++n) {
        for (int d = 1; d <= 6; ++d) {
            auto index = enumerate_diagrams(n, d);
            CHECK(static_cast<long>(index.size()) == count_partitions(n, d, n));
            for (std::size_t i = 1; i < index.size(); ++i) {
                CHECK(canonical_before(index[i - 1], index[i]));
            }
        }
    }
}

TEST_CASE("add_box and remove_box") {
    auto up = add_box(Y({2, 1}));
    CHECK(up == std::vector<YoungDiagram>{Y({3, 1}), Y({2, 2}), Y({2, 1, 1})});
    CHECK(add_box(Y({2, 1}), 3) == up);
    CHECK(add_box(Y({}), 1) == std::vector<YoungDiagram>{Y({1})});
    CHECK(add_box(Y({1, 1}), 2) == std::vector<YoungDiagram>{Y({2, 1})});

    auto down = remove_box(Y({2, 1}));
    std::set<YoungDiagram> got(down.begin(), down.end());
    CHECK(got == std::set<YoungDiagram>{Y({1, 1}), Y({2})});
    CHECK(remove_box(Y({1})) == std::vector<YoungDiagram>{Y({})});
    CHECK(remove_box(Y({2, 2})) == std::vector<YoungDiagram>{Y({2, 1})});
    CHECK_THROWS_AS((void)remove_box(Y({})), std::invalid_argument);
}

TEST_CASE("lattice duality up to eight boxes") {
    for (int n = 0; n < 8; ++n) {
        for (const auto &alpha : enumerate_diagrams(n, n + 1)) {
            for (const auto &mu : enumerate_diagrams(n + 1, n + 1)) {
                auto up = add_box(alpha);
                auto down = remove_box(mu);
                const bool a = std::find(up.begin(), up.end(), mu) != up.end();
                const bool b =
                    std::find(down.begin(), down.end(), alpha) != down.end();
                CHECK(a == b);
            }
        }
    }
}

TEST_CASE("mult and dim_u") {
    CHECK(mult(Y({5})) == 1);
    CHECK(mult(Y({2, 1})) == 2);
    CHECK(mult(Y({3, 1})) == 3);
    CHECK(mult(Y({2, 2})) == 2);
    CHECK(mult(Y({2, 1, 1})) == 3);
    CHECK(mult(Y({})) == 1);

    CHECK(dim_u(Y({1}), 5) == 5);
    CHECK(dim_u(Y({2}), 2) == 3);
    CHECK(dim_u(Y({1, 1}), 2) == 1);
    CHECK(dim_u(Y({2, 1}), 3) == 8);
    CHECK(dim_u(Y({}), 4) == 1);
    CHECK_THROWS_AS((void)dim_u(Y({1, 1, 1}), 2), std::invalid_argument);
}

TEST_CASE("big multiplicities stay exact") {
    BigInt expected = factorial(30);
    CHECK(mult(Y({29, 1})) == 29);
    std::vector<int> rows(30, 1);
    CHECK(mult(Y(rows)) == 1);
    // staircase-like shape whose m exceeds 2^64
    auto m = mult(Y({8, 7, 6, 5, 4}));
    CHECK(m > BigInt(1));
    CHECK(expected % factorial(10) == 0);
}

TEST_CASE("regular representation identity") {
    for (int n = 0; n <= 8; ++n) {
        BigInt total = 0;
        for (const auto &alpha : enumerate_diagrams(n, std::max(n, 1))) {
            total += mult(alpha) * mult(alpha);
        }
        CHECK(total == factorial(n));
    }
}

TEST_CASE("sum of d_alpha m_alpha is d^n") {
    for (int n = 0; n <= 6; ++n) {
        for (int d = 1; d <= 4; ++d) {
            BigInt total = 0;
            for (const auto &alpha : enumerate_diagrams(n, d)) {
                total += mult(alpha) * dim_u(alpha, d);
            }
            BigInt power = 1;
            for (int k = 0; k < n; ++k) {
                power *= d;
            }
            CHECK(total == power);
        }
    }
}

TEST_CASE("standard_tableaux") {
    auto fam = standard_tableaux(Y({2, 1}));
    REQUIRE(fam.size() == 2);
    CHECK(fam.tableaux[0].rows == std::vector<std::vector<int>>{{1, 2}, {3}});
    CHECK(fam.tableaux[1].rows == std::vector<std::vector<int>>{{1, 3}, {2}});
    CHECK(standard_tableaux(Y({4})).size() == 1);

    const auto &to31 = fam.addbox_map.at(Y({3, 1}));
    auto fam31 = standard_tableaux(Y({3, 1}));
    CHECK(fam31.tableaux[to31[0]].rows ==
          std::vector<std::vector<int>>{{1, 2, 4}, {3}});

    auto empty = standard_tableaux(Y({}));
    CHECK(empty.size() == 1);
    CHECK(empty.addbox_map.at(Y({1})) == std::vector<std::size_t>{0});
}

TEST_CASE("tableau families up to eight boxes") {
    for (int n = 0; n <= 8; ++n) {
        for (const auto &alpha : enumerate_diagrams(n, std::max(n, 1))) {
            auto fam = standard_tableaux(alpha);
            CHECK(BigInt(fam.size()) == mult(alpha));
            for (const auto &t : fam.tableaux) {
                CHECK(is_standard(t));
                CHECK(t.frame() == alpha);
            }
            for (std::size_t i = 1; i < fam.size(); ++i) {
                CHECK(fam.tableaux[i - 1].reading_word() <
                      fam.tableaux[i].reading_word());
            }
            if (n > 6) {
                continue;
            }
            for (const auto &mu : add_box(alpha)) {
                const auto &map = fam.addbox_map.at(mu);
                REQUIRE(map.size() == fam.size());
                std::set<std::size_t> seen(map.begin(), map.end());
                CHECK(seen.size() == map.size());
                auto fam_mu = standard_tableaux(mu);
                for (std::size_t a = 0; a < map.size(); ++a) {
                    CHECK(fam_mu.tableaux[map[a]].without_largest() ==
                          fam.tableaux[a]);
                }
            }
        }
    }
}

TEST_CASE("branching rule") {
    CHECK(check_branching(Y({2, 1})));
    CHECK(check_branching(Y({})));
    for (const auto &alpha : enumerate_diagrams(6, 5)) {
        CHECK(check_branching(alpha));
    }
    for (int n = 0; n <= 8; ++n) {
        for (const auto &alpha : enumerate_diagrams(n, std::max(n, 1))) {
            CHECK(check_branching(alpha));
        }
    }
}
