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

#include "portdual/inversion.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "portdual/repsym.hpp"

namespace portdual::inversion {

using young::YoungDiagram;

namespace {

std::size_t ipow(int base, int exp) {
    std::size_t out = 1;
    for (int k = 0; k < exp; ++k) {
        out *= static_cast<std::size_t>(base);
    }
    return out;
}

void check_params(int n, int d, int extra_factors, std::size_t cap,
                  const char *who) {
    if (n < 0 || d < 1) {
        throw std::invalid_argument(std::string(who) +
                                    ": parameters out of range");
    }
    if (ipow(d, 2 * n + extra_factors) > cap) {
        throw std::length_error(std::string(who) +
                                ": operator dimension exceeds the cap");
    }
}

RMatrix rkron(const RMatrix &a, const RMatrix &b) {
    RMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) =
                a(i, j) * b;
        }
    }
    return out;
}

} // namespace

DenseOperator performance_operator(int n, int d, std::size_t cap) {
    check_params(n, d, 2, cap, "performance_operator");
    const auto side = static_cast<Eigen::Index>(ipow(d, n + 1));
    RMatrix acc = RMatrix::Zero(side * side, side * side);
    for (const auto &mu : young::enumerate_diagrams(n + 1, d)) {
        const repsym::MatrixUnitTable units(mu, d);
        const double c = 1.0 / young::dim_u_real(mu, d);
        for (std::size_t i = 0; i < units.size(); ++i) {
            for (std::size_t j = 0; j < units.size(); ++j) {
                const auto &e = units.real(i, j);
                acc += c * rkron(e, e);
            }
        }
    }
    acc /= static_cast<double>(d * d);

    // built on I_1..I_n F O_1..O_n P
    const std::vector<int> shape(static_cast<std::size_t>(2 * n + 2), d);
    DenseOperator raw(acc.cast<Complex>(), shape);
    std::vector<int> order;
    order.push_back(2 * n + 1);
    for (int k = 0; k < n; ++k) {
        order.push_back(k);
    }
    for (int k = 0; k < n; ++k) {
        order.push_back(n + 1 + k);
    }
    order.push_back(n);
    return permute_factors(raw, order);
}

DenseOperator dual_W(int n, int d, std::size_t cap) {
    check_params(n, d, 1, cap, "dual_W");
    if (n >= d) {
        throw std::domain_error("dual_W: the witness requires n <= d - 1");
    }
    const auto in_dim = static_cast<Eigen::Index>(ipow(d, n));
    const auto out_dim = static_cast<Eigen::Index>(ipow(d, n + 1));
    RMatrix acc = RMatrix::Zero(in_dim * out_dim, in_dim * out_dim);
    for (const auto &alpha : young::enumerate_diagrams(n, d)) {
        const auto family = young::standard_tableaux(alpha);
        const repsym::MatrixUnitTable low(alpha, d);
        const double m_alpha = young::mult_real(alpha);
        for (const auto &mu : young::add_box(alpha, d)) {
            const repsym::MatrixUnitTable high(mu, d);
            const auto &map = family.addbox_map.at(mu);
            const double c = young::mult_real(mu) /
                             (m_alpha * young::dim_u_real(mu, d));
            for (std::size_t a = 0; a < low.size(); ++a) {
                for (std::size_t b = 0; b < low.size(); ++b) {
                    acc += c * rkron(low.real(a, b), high.real(map[a], map[b]));
                }
            }
        }
    }
    acc /= static_cast<double>(n + 1);

    // built on I_1..I_n O_1..O_n P
    const std::vector<int> shape(static_cast<std::size_t>(2 * n + 1), d);
    DenseOperator raw(acc.cast<Complex>(), shape);
    std::vector<int> order;
    order.push_back(2 * n);
    for (int k = 0; k < 2 * n; ++k) {
        order.push_back(k);
    }
    return permute_factors(raw, order);
}

DualWitness dual_witness(int n, int d, std::size_t cap) {
    DualWitness out;
    out.n = n;
    out.d = d;
    out.lambda = static_cast<double>(n + 1) / static_cast<double>(d * d);
    out.W = dual_W(n, d, cap);
    out.omega = performance_operator(n, d, cap);
    return out;
}

FeasibilityReport check_dual_feasibility(int n, int d, double tol,
                                         std::size_t cap) {
    if (!(tol > 0.0)) {
        throw std::invalid_argument("check_dual_feasibility: tol must be positive");
    }
    const auto witness = dual_witness(n, d, cap);
    FeasibilityReport r;
    r.n = n;
    r.d = d;
    r.lambda = witness.lambda;
    r.tol = tol;

    const auto &w = witness.W;
    const auto lifted = kron(w, DenseOperator::identity({d}));
    r.psd_margin =
        min_eigenvalue(witness.lambda * lifted.matrix - witness.omega.matrix);
    r.trace_gap = std::abs(w.matrix.trace().real() -
                           static_cast<double>(ipow(d, n)));
    r.hermiticity = hermiticity_defect(w.matrix);

    for (int i = 1; i <= n; ++i) {
        const std::vector<int> out_slot{n + i};
        const std::vector<int> both{i, n + i};
        const auto lhs = partial_trace(w, out_slot);
        auto rhs = insert_identity(partial_trace(w, both), i, d);
        rhs.matrix /= static_cast<double>(d);
        r.ptrace_residuals.push_back(frobenius(lhs.matrix - rhs.matrix));
    }

    r.verdict = r.psd_margin >= -tol && r.trace_gap <= tol &&
                r.hermiticity <= tol;
    for (double res : r.ptrace_residuals) {
        r.verdict = r.verdict && res <= tol;
    }
    return r;
}

CoefficientPair coefficient_A(const YoungDiagram &alpha,
                              const YoungDiagram &beta, std::size_t a,
                              std::size_t b, std::size_t c, std::size_t e,
                              int n, int d) {
    if (n < 1 || alpha.boxes() != n || beta.boxes() != n ||
        alpha.depth() > d || beta.depth() > d) {
        throw std::invalid_argument("coefficient_A: diagrams must lie in Y^d_n, n >= 1");
    }
    if (n >= d) {
        throw std::domain_error("coefficient_A: identity requires n <= d - 1");
    }
    const auto fa = young::standard_tableaux(alpha);
    const auto fb = young::standard_tableaux(beta);
    if (a >= fa.size() || b >= fa.size() || c >= fb.size() || e >= fb.size()) {
        throw std::out_of_range("coefficient_A: tableau index out of range");
    }

    CoefficientPair out;
    const double m_alpha = young::mult_real(alpha);
    const auto up_b = young::add_box(beta, d);
    for (const auto &mu : young::add_box(alpha, d)) {
        if (std::find(up_b.begin(), up_b.end(), mu) == up_b.end()) {
            continue;
        }
        const repsym::OrthogonalIrrep irrep(mu);
        const auto &tau = irrep.generator(n);
        const auto &ma = fa.addbox_map.at(mu);
        const auto &mb = fb.addbox_map.at(mu);
        auto at = [&](std::size_t i, std::size_t j) {
            return tau(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
        };
        out.lhs += young::mult_real(mu) / m_alpha * at(mb[c], ma[a]) *
                   at(ma[b], mb[e]);
    }
    out.lhs /= static_cast<double>(n + 1);

    const auto ra = fa.tableaux[a].without_largest();
    const auto rb = fa.tableaux[b].without_largest();
    const auto rc = fb.tableaux[c].without_largest();
    const auto re = fb.tableaux[e].without_largest();
    if (ra == rc && rb == re && ra.frame() == rb.frame()) {
        const double m_lambda = young::mult_real(ra.frame());
        out.rhs = young::mult_real(beta) / (static_cast<double>(n) * m_lambda);
    }
    return out;
}

CoefficientSweep coefficient_sweep(int n, int d) {
    CoefficientSweep out;
    const auto diagrams = young::enumerate_diagrams(n, d);
    for (const auto &alpha : diagrams) {
        const auto ma = static_cast<std::size_t>(young::mult_real(alpha));
        for (const auto &beta : diagrams) {
            const auto mb = static_cast<std::size_t>(young::mult_real(beta));
            for (std::size_t a = 0; a < ma; ++a) {
                for (std::size_t b = 0; b < ma; ++b) {
                    for (std::size_t c = 0; c < mb; ++c) {
                        for (std::size_t e = 0; e < mb; ++e) {
                            const auto p =
                                coefficient_A(alpha, beta, a, b, c, e, n, d);
                            out.max_abs_diff =
                                std::max(out.max_abs_diff, std::abs(p.lhs - p.rhs));
                            ++out.tuples;
                        }
                    }
                }
            }
        }
    }
    return out;
}

InversionBound inversion_bound(int n, int d, double tol, std::size_t cap) {
    if (n < 0 || d < 1) {
        throw std::invalid_argument("inversion_bound: parameters out of range");
    }
    if (n >= d) {
        throw std::domain_error("inversion_bound: requires n <= d - 1");
    }
    InversionBound out;
    out.value = static_cast<double>(n + 1) / static_cast<double>(d * d);
    if (ipow(d, 2 * n + 2) <= cap) {
        out.report = check_dual_feasibility(n, d, tol, cap);
    }
    return out;
}

} // namespace portdual::inversion
