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

#include <cmath>
#include <random>

#include "doctest.h"

#include "portdual/inversion.hpp"
#include "portdual/repsym.hpp"

using namespace portdual;
using namespace portdual::inversion;
using young::YoungDiagram;

namespace {

template <typename Derived>
double max_abs(const Eigen::MatrixBase<Derived> &m) {
    return m.cwiseAbs().maxCoeff();
}

// |U>> on (in, out) with the input factor first
CVector vec_of(const CMatrix &u) {
    const auto d = u.rows();
    CVector v(d * d);
    for (Eigen::Index i = 0; i < d; ++i) {
        for (Eigen::Index o = 0; o < d; ++o) {
            v(i * d + o) = u(o, i);
        }
    }
    return v;
}

} // namespace

TEST_CASE("performance operator traces and small cases") {
    for (auto [n, d] : {std::pair{0, 2}, std::pair{1, 2}, std::pair{0, 3},
                        std::pair{1, 3}, std::pair{2, 3}}) {
        auto omega = performance_operator(n, d);
        CHECK(omega.matrix.trace().real() ==
              doctest::Approx(std::pow(d, n - 1)).epsilon(1e-12));
        CHECK(hermiticity_defect(omega.matrix) <= 1e-12);
        CHECK(min_eigenvalue(omega.matrix) >= -1e-12);
    }
    // n = 0 is the Haar average of |U>><<U| over d^2
    auto zero = performance_operator(0, 2);
    CHECK(max_abs(zero.matrix - CMatrix::Identity(4, 4) / 8.0) <= 1e-14);
    CHECK_THROWS_AS((void)performance_operator(3, 3), std::length_error);
}

TEST_CASE("performance operator equals a Haar average") {
    // the layout P I F for n = 0 and P I O F for n = 1 both pair (I,P), (F,O)
    const int d = 2;
    const int samples = 40000;
    repsym::HaarSampler haar(77);
    CMatrix acc = CMatrix::Zero(16, 16);
    for (int s = 0; s < samples; ++s) {
        const CMatrix u = haar.next(d);
        const CVector v = vec_of(u);
        // kron on (I_1, O_1) then (F, P): reorder to P I O F
        CVector pair(16);
        for (int i = 0; i < 2; ++i)
            for (int o = 0; o < 2; ++o)
                for (int f = 0; f < 2; ++f)
                    for (int p = 0; p < 2; ++p)
                        pair(((p * 2 + i) * 2 + o) * 2 + f) =
                            v(i * 2 + o) * v(f * 2 + p);
        acc += pair * pair.adjoint();
    }
    acc /= static_cast<double>(samples) * d * d;
    auto omega = performance_operator(1, d);
    CHECK(max_abs(acc - omega.matrix) <= 0.01);
}

TEST_CASE("performance operator unitary symmetry") {
    // |V U W>> = (W^T (x) V)|U>>, so Omega commutes with W^T on I, F and V on O, P
    for (int n : {1, 2}) {
        const int d = 3;
        auto omega = performance_operator(n, d).matrix;
        const CMatrix v = repsym::haar_unitary(d, 3).matrix;
        const CMatrix wt = repsym::haar_unitary(d, 4).matrix.transpose();
        CMatrix g = v;
        for (int k = 0; k < n; ++k) {
            g = kron(g, wt);
        }
        for (int k = 0; k < n; ++k) {
            g = kron(g, v);
        }
        g = kron(g, wt);
        CHECK(max_abs(g * omega * g.adjoint() - omega) <= 1e-12);
    }
}

TEST_CASE("dual witness basics") {
    auto w12 = dual_W(1, 2);
    CHECK(w12.matrix.trace().real() == doctest::Approx(2.0));
    // 1/2 on I times (P_sym / 3 + P_anti) on (O, P)
    const auto sym = repsym::young_projector(YoungDiagram({2}), 2);
    const auto anti = repsym::young_projector(YoungDiagram({1, 1}), 2);
    const CMatrix op = sym.matrix / 3.0 + anti.matrix;
    // canonical order P I O: build as I (x) (O P) then permute
    DenseOperator raw(kron(CMatrix::Identity(2, 2) / 2.0, op), {2, 2, 2});
    const std::vector<int> order{2, 0, 1};
    auto expected = permute_factors(raw, order);
    CHECK(max_abs(w12.matrix - expected.matrix) <= 1e-12);

    auto w0 = dual_W(0, 3);
    CHECK(max_abs(w0.matrix - CMatrix::Identity(3, 3) / 3.0) <= 1e-14);
    CHECK_THROWS_AS((void)dual_W(2, 2), std::domain_error);
    CHECK_THROWS_AS((void)dual_W(-1, 2), std::invalid_argument);

    for (auto [n, d] : {std::pair{1, 3}, std::pair{2, 3}}) {
        auto w = dual_W(n, d);
        CHECK(w.matrix.trace().real() == doctest::Approx(std::pow(d, n)).epsilon(1e-12));
        CHECK(min_eigenvalue(w.matrix) >= -1e-12);
    }
}

TEST_CASE("dual witness permutation symmetry") {
    const int n = 2;
    const int d = 3;
    auto w = dual_W(n, d).matrix;
    const auto swap = repsym::perm_matrix(repsym::Permutation::transposition(2, 1, 2), d).matrix;
    // P I1 I2 O1 O2 with the same swap on I and O
    const CMatrix g = kron(kron(CMatrix::Identity(d, d), swap), swap);
    CHECK(max_abs(g * w * g.adjoint() - w) <= 1e-12);
}

TEST_CASE("dual feasibility") {
    for (auto [n, d] : {std::pair{0, 2}, std::pair{1, 2}, std::pair{1, 3}, std::pair{2, 3}}) {
        auto r = check_dual_feasibility(n, d);
        CHECK(r.verdict);
        CHECK(r.psd_margin >= -1e-9);
        CHECK(r.trace_gap <= 1e-10);
        CHECK(r.ptrace_residuals.size() == static_cast<std::size_t>(n));
        for (double res : r.ptrace_residuals) {
            CHECK(res <= 1e-9);
        }
        CHECK(r.lambda == doctest::Approx((n + 1.0) / (d * d)));
    }
    CHECK_THROWS_AS((void)check_dual_feasibility(2, 2), std::domain_error);
    CHECK_THROWS_AS((void)check_dual_feasibility(1, 2, 0.0), std::invalid_argument);
}

TEST_CASE("the witness is tight") {
    // lambda (W (x) 1) - Omega has a kernel
    auto r = check_dual_feasibility(1, 2);
    CHECK(std::abs(r.psd_margin) <= 1e-10);
}

TEST_CASE("inversion bound") {
    auto b = inversion_bound(1, 2);
    CHECK(b.value == doctest::Approx(0.5));
    REQUIRE(b.report.has_value());
    CHECK(b.report->verdict);
    auto big = inversion_bound(3, 5);
    CHECK(big.value == doctest::Approx(4.0 / 25.0));
    CHECK_FALSE(big.report.has_value());
    CHECK_THROWS_AS((void)inversion_bound(3, 3), std::domain_error);
}

TEST_CASE("coefficient identity by hand") {
    auto one = coefficient_A(YoungDiagram({1}), YoungDiagram({1}), 0, 0, 0, 0, 1, 2);
    CHECK(one.lhs == doctest::Approx(1.0));
    CHECK(one.rhs == doctest::Approx(1.0));

    // alpha = (2), beta = (1,1): both reduce to (1)
    auto mixed = coefficient_A(YoungDiagram({2}), YoungDiagram({1, 1}), 0, 0, 0, 0, 2, 3);
    CHECK(mixed.rhs == doctest::Approx(0.5));
    CHECK(mixed.lhs == doctest::Approx(mixed.rhs).epsilon(1e-12));

    CHECK_THROWS_AS((void)coefficient_A(YoungDiagram({1}), YoungDiagram({1}), 1, 0, 0, 0, 1, 2),
                    std::out_of_range);
    CHECK_THROWS_AS((void)coefficient_A(YoungDiagram({2}), YoungDiagram({2}), 0, 0, 0, 0, 2, 2),
                    std::domain_error);
}

TEST_CASE("coefficient identity exhaustive") {
    for (int n = 1; n <= 3; ++n) {
        auto s = coefficient_sweep(n, n + 1);
        CHECK(s.tuples > 0u);
        CHECK(s.max_abs_diff <= 1e-12);
    }
    auto s = coefficient_sweep(3, 5);
    CHECK(s.max_abs_diff <= 1e-12);
}
