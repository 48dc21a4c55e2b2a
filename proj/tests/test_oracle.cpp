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

#include "portdual/oracle.hpp"
#include "portdual/repsym.hpp"

using namespace portdual;
using namespace portdual::oracle;
using correspondence::Role;
using young::enumerate_diagrams;

namespace {

CoefficientVector uniform(Role role, int n, int d) {
    auto index = enumerate_diagrams(n, d);
    Eigen::VectorXd v = Eigen::VectorXd::Ones(static_cast<Eigen::Index>(index.size()));
    return CoefficientVector::normalized(role, std::move(index), v);
}

CoefficientVector by_mult(Role role, int n, int d) {
    auto index = enumerate_diagrams(n, d);
    Eigen::VectorXd v(static_cast<Eigen::Index>(index.size()));
    for (std::size_t k = 0; k < index.size(); ++k) {
        v(static_cast<Eigen::Index>(k)) = young::mult_real(index[k]);
    }
    return CoefficientVector::normalized(role, std::move(index), v);
}

CoefficientVector random_w(int n, int d, std::mt19937_64 &rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    auto index = enumerate_diagrams(n, d);
    Eigen::VectorXd v(static_cast<Eigen::Index>(index.size()));
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        v(i) = u(rng);
    }
    return CoefficientVector::normalized(Role::W, std::move(index), v);
}

CoefficientVector basis(Role role, int n, int d, std::size_t k) {
    auto index = enumerate_diagrams(n, d);
    Eigen::VectorXd v = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(index.size()));
    v(static_cast<Eigen::Index>(k)) = 1.0;
    return {role, std::move(index), v};
}

template <typename Derived>
double max_abs(const Eigen::MatrixBase<Derived> &m) {
    return m.cwiseAbs().maxCoeff();
}

} // namespace

TEST_CASE("resource_state") {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 10; ++trial) {
        const int n = 1 + trial % 3;
        const int d = 2 + trial % 2;
        auto w = random_w(n, d, rng);
        auto phi = resource_state(w, n, d);
        CHECK(std::abs(phi.amplitudes.norm() - 1.0) <= 1e-12);
        auto back = extract_w(phi, n, d);
        CHECK(max_abs(back.values - w.values) <= 1e-10);
        auto back_mixed = extract_w(phi.density(), n, d);
        CHECK(max_abs(back_mixed.values - w.values) <= 1e-10);
    }

    auto bell = resource_state(basis(Role::W, 1, 3, 0), 1, 3);
    for (Eigen::Index x = 0; x < 9; ++x) {
        const double expected = (x % 4 == 0) ? 1.0 / std::sqrt(3.0) : 0.0;
        CHECK(std::abs(bell.amplitudes(x) - expected) <= 1e-12);
    }

    Caps small;
    small.resource_dim = 8;
    CHECK_THROWS_AS((void)resource_state(uniform(Role::W, 4, 2), 4, 2, small),
                    CapExceeded);
}

TEST_CASE("extract_w examples") {
    for (int n = 1; n <= 3; ++n) {
        for (int d = 2; d <= 3; ++d) {
            // N copies of |phi+>: the identity on A^N
            const std::size_t dim = static_cast<std::size_t>(std::pow(d, n));
            PureState phi;
            phi.factor_shape.assign(static_cast<std::size_t>(2 * n), d);
            phi.amplitudes = CVector::Zero(static_cast<Eigen::Index>(dim * dim));
            for (std::size_t x = 0; x < dim; ++x) {
                phi.amplitudes(static_cast<Eigen::Index>(x * dim + x)) =
                    1.0 / std::sqrt(static_cast<double>(dim));
            }
            auto w = extract_w(phi, n, d);
            for (std::size_t k = 0; k < w.index.size(); ++k) {
                const auto &mu = w.index[k];
                const double expected = std::sqrt(
                    young::dim_u_real(mu, d) * young::mult_real(mu) /
                    static_cast<double>(dim));
                CHECK(w.values(static_cast<Eigen::Index>(k)) ==
                      doctest::Approx(expected).epsilon(1e-12));
            }

            PureState zero;
            zero.factor_shape = phi.factor_shape;
            zero.amplitudes = CVector::Zero(phi.amplitudes.size());
            zero.amplitudes(0) = 1.0;
            auto wz = extract_w(zero, n, d);
            CHECK(wz.values(0) == doctest::Approx(1.0));
            CHECK(wz.values.tail(wz.values.size() - 1).norm() <= 1e-12);
        }
    }
}

TEST_CASE("square-root measurement") {
    for (auto [n, d] : {std::pair{2, 2}, std::pair{3, 2}, std::pair{2, 3}}) {
        auto povm = srm_povm(n, d);
        REQUIRE(povm.size() == static_cast<std::size_t>(n));
        CMatrix total = CMatrix::Zero(povm[0].matrix.rows(), povm[0].matrix.cols());
        for (const auto &pi : povm) {
            CHECK(min_eigenvalue(pi.matrix) >= -1e-10);
            CHECK(hermiticity_defect(pi.matrix) <= 1e-12);
            total += pi.matrix;
        }
        CHECK(max_abs(total - CMatrix::Identity(total.rows(), total.cols())) <=
              1e-10);
    }
    auto povm = srm_povm(2, 2);
    const double t0 = (povm[0].matrix * port_state(0, 2, 2).matrix).trace().real();
    const double t1 = (povm[1].matrix * port_state(1, 2, 2).matrix).trace().real();
    CHECK(std::abs(t0 - t1) <= 1e-12);

    auto first = srm_povm(2, 2, DeficitSplit::First);
    CMatrix total = first[0].matrix + first[1].matrix;
    CHECK(max_abs(total - CMatrix::Identity(8, 8)) <= 1e-10);
}

TEST_CASE("port states") {
    auto s = port_state(0, 2, 2).matrix;
    CHECK(s.trace().real() == doctest::Approx(1.0));
    CHECK(min_eigenvalue(s) >= -1e-14);
    CHECK_THROWS_AS((void)port_state(2, 2, 2), std::out_of_range);
}

TEST_CASE("channel fidelity of simple channels") {
    for (int d = 2; d <= 3; ++d) {
        auto id = choi_from_kraus({CMatrix::Identity(d, d)});
        CHECK(channel_fidelity(id) == doctest::Approx(1.0));

        std::vector<CMatrix> depol;
        for (int i = 0; i < d; ++i) {
            for (int j = 0; j < d; ++j) {
                CMatrix k = CMatrix::Zero(d, d);
                k(i, j) = 1.0 / std::sqrt(static_cast<double>(d));
                depol.push_back(k);
            }
        }
        CHECK(channel_fidelity(choi_from_kraus(depol)) ==
              doctest::Approx(1.0 / (d * d)));

        const CMatrix u = repsym::haar_unitary(d, 5).matrix;
        CHECK(channel_fidelity(choi_from_kraus({u})) ==
              doctest::Approx(std::norm(u.trace()) / (d * d)));
    }
}

TEST_CASE("simulated channel matches the spectral value") {
    const std::vector<std::pair<int, int>> grid{{2, 2}, {3, 2}, {4, 2}, {2, 3}, {3, 3}};
    for (auto [n, d] : grid) {
        for (const auto &w : {uniform(Role::W, n, d), by_mult(Role::W, n, d)}) {
            auto j = pbt_channel_choi(w, n, d);
            CHECK(min_eigenvalue(j.matrix.matrix) >= -1e-10);
            const std::vector<int> out{1};
            auto tp = partial_trace(j.matrix, out);
            CHECK(max_abs(tp.matrix - CMatrix::Identity(d, d)) <= 1e-9);
            const double spectral = correspondence::fidelity_pbt(w, n, d);
            CHECK(std::abs(channel_fidelity(j) - spectral) <= 1e-8);
        }
    }
    auto half = uniform(Role::W, 2, 2);
    CHECK(channel_fidelity(pbt_channel_choi(half, 2, 2)) ==
          doctest::Approx(0.5).epsilon(1e-8));
}

TEST_CASE("deficit split does not change the fidelity") {
    for (auto [n, d] : {std::pair{2, 2}, std::pair{3, 2}, std::pair{2, 3}}) {
        auto w = by_mult(Role::W, n, d);
        const double equal =
            channel_fidelity(pbt_channel_choi(w, n, d, DeficitSplit::Equal));
        const double first =
            channel_fidelity(pbt_channel_choi(w, n, d, DeficitSplit::First));
        CHECK(std::abs(equal - first) <= 1e-12);
    }
}

TEST_CASE("covariantization never hurts") {
    std::mt19937_64 rng(123);
    std::normal_distribution<double> g(0.0, 1.0);
    const int n = 2;
    const int d = 2;
    const auto povm = srm_povm(n, d);
    for (int trial = 0; trial < 20; ++trial) {
        PureState phi;
        phi.factor_shape.assign(4, d);
        phi.amplitudes.resize(16);
        for (Eigen::Index i = 0; i < 16; ++i) {
            phi.amplitudes(i) = Complex(g(rng), g(rng));
        }
        phi.amplitudes.normalize();
        const double raw = channel_fidelity(pbt_channel_choi(phi, povm, n, d));
        const auto w = extract_w(phi, n, d);
        const double cov = channel_fidelity(pbt_channel_choi(w, n, d));
        CHECK(raw <= cov + 1e-8);
    }
}

TEST_CASE("Monte-Carlo estimation fidelity") {
    const std::size_t samples = 100000;
    auto check = [&](const CoefficientVector &v, int n, int d, double expected) {
        auto mc = mc_est_fidelity(v, n, d, samples, 2026);
        CHECK(std::abs(mc.estimate - expected) <= 3.0 * mc.stderr_);
        CHECK(mc.stderr_ > 0.0);
        CHECK(std::abs(mc.estimate - correspondence::fidelity_est(v, n, d)) <=
              4.0 * mc.stderr_);
    };
    check(basis(Role::V, 0, 3, 0), 0, 3, 1.0 / 9.0);
    check(uniform(Role::V, 2, 3), 2, 3, 1.0 / 3.0);
    check(basis(Role::V, 2, 2, 0), 2, 2, 0.5);
}

TEST_CASE("Monte-Carlo is reproducible for a fixed triple") {
    auto v = uniform(Role::V, 2, 2);
    auto a = mc_est_fidelity(v, 2, 2, 5000, 7, 3);
    auto b = mc_est_fidelity(v, 2, 2, 5000, 7, 3);
    CHECK(a.estimate == b.estimate);
    CHECK(a.stderr_ == b.stderr_);
    auto c = mc_est_fidelity(v, 2, 2, 5000, 8, 3);
    CHECK(a.estimate != c.estimate);
    CHECK_THROWS_AS((void)mc_est_fidelity(v, 2, 2, 0, 7), std::invalid_argument);
}

TEST_CASE("oracle reports") {
    auto r = compare_pbt(uniform(Role::W, 2, 2), 2, 2);
    CHECK(r.task == "pbt");
    CHECK(r.abs_diff <= 1e-8);
    CHECK_FALSE(r.stderr_.has_value());
    auto e = compare_est(uniform(Role::V, 1, 2), 1, 2, 20000, 1);
    CHECK(e.samples == 20000u);
    CHECK(e.abs_diff <= 4.0 * *e.stderr_);
}
