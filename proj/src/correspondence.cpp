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

#include "portdual/correspondence.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace portdual::correspondence {

namespace {

void require_params(int n, int d, int min_n, int min_d, const char *who) {
    if (n < min_n || d < min_d) {
        throw std::invalid_argument(std::string(who) +
                                    ": parameters out of range");
    }
}

std::int64_t intersection_size(const std::vector<YoungDiagram> &a,
                               const std::vector<YoungDiagram> &b) {
    std::int64_t count = 0;
    for (const auto &x : a) {
        if (std::find(b.begin(), b.end(), x) != b.end()) {
            ++count;
        }
    }
    return count;
}

FidelityMatrix assemble(Task kind, int n, int d, DiagramIndex index,
                        const std::vector<std::vector<YoungDiagram>> &sets) {
    const auto k = static_cast<Eigen::Index>(index.size());
    FidelityMatrix m;
    m.kind = kind;
    m.n = n;
    m.d = d;
    m.counts.resize(k, k);
    for (Eigen::Index i = 0; i < k; ++i) {
        for (Eigen::Index j = i; j < k; ++j) {
            const auto c = intersection_size(sets[static_cast<std::size_t>(i)],
                                             sets[static_cast<std::size_t>(j)]);
            m.counts(i, j) = c;
            m.counts(j, i) = c;
        }
    }
    m.values = m.counts.cast<double>() / static_cast<double>(d * d);
    m.index = std::move(index);
    return m;
}

struct SparseRows {
    std::vector<std::vector<std::pair<Eigen::Index, double>>> rows;

    explicit SparseRows(const Eigen::MatrixXd &m) : rows(static_cast<std::size_t>(m.rows())) {
        for (Eigen::Index i = 0; i < m.rows(); ++i) {
            for (Eigen::Index j = 0; j < m.cols(); ++j) {
                if (m(i, j) != 0.0) {
                    rows[static_cast<std::size_t>(i)].emplace_back(j, m(i, j));
                }
            }
        }
    }

    void apply(const Eigen::VectorXd &x, Eigen::VectorXd &y) const {
        for (std::size_t i = 0; i < rows.size(); ++i) {
            double acc = 0.0;
            for (const auto &[j, v] : rows[i]) {
                acc += v * x(j);
            }
            y(static_cast<Eigen::Index>(i)) = acc;
        }
    }
};

Eigen::VectorXd clamp_and_normalize(Eigen::VectorXd x) {
    if (x.sum() < 0.0) {
        x = -x;
    }
    for (Eigen::Index i = 0; i < x.size(); ++i) {
        if (x(i) < 0.0) {
            x(i) = 0.0;
        }
    }
    return x / x.norm();
}

void require_index(const CoefficientVector &x, int n, int d, const char *who) {
    if (!(x.index == young::enumerate_diagrams(n, d))) {
        throw std::invalid_argument(std::string(who) +
                                    ": vector index does not match (n, d)");
    }
}

} // namespace

IncidenceMatrix::IncidenceMatrix(int n, int d)
    : n_(n), d_(d), rows_(young::enumerate_diagrams(n, d)),
      cols_(young::enumerate_diagrams(n + 1, d)) {
    require_params(n, d, 0, 1, "build_R");
    col_support_.resize(cols_.size());
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        for (const auto &mu : young::add_box(rows_[r], d)) {
            col_support_[*cols_.position(mu)].push_back(r);
        }
    }
    for (auto &support : col_support_) {
        std::sort(support.begin(), support.end());
    }
}

int IncidenceMatrix::entry(std::size_t row, std::size_t col) const {
    if (row >= rows_.size() || col >= cols_.size()) {
        throw std::out_of_range("IncidenceMatrix::entry: index out of range");
    }
    const auto &s = col_support_[col];
    return std::binary_search(s.begin(), s.end(), row) ? 1 : 0;
}

Eigen::MatrixXi IncidenceMatrix::dense() const {
    Eigen::MatrixXi out = Eigen::MatrixXi::Zero(
        static_cast<Eigen::Index>(rows_.size()),
        static_cast<Eigen::Index>(cols_.size()));
    for (std::size_t c = 0; c < cols_.size(); ++c) {
        for (auto r : col_support_[c]) {
            out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = 1;
        }
    }
    return out;
}

Eigen::VectorXd IncidenceMatrix::apply(const Eigen::VectorXd &w) const {
    if (static_cast<std::size_t>(w.size()) != cols_.size()) {
        throw std::invalid_argument("IncidenceMatrix::apply: size mismatch");
    }
    Eigen::VectorXd out = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(rows_.size()));
    for (std::size_t c = 0; c < cols_.size(); ++c) {
        for (auto r : col_support_[c]) {
            out(static_cast<Eigen::Index>(r)) += w(static_cast<Eigen::Index>(c));
        }
    }
    return out;
}

Eigen::VectorXd IncidenceMatrix::apply_transpose(const Eigen::VectorXd &v) const {
    if (static_cast<std::size_t>(v.size()) != rows_.size()) {
        throw std::invalid_argument(
            "IncidenceMatrix::apply_transpose: size mismatch");
    }
    Eigen::VectorXd out = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(cols_.size()));
    for (std::size_t c = 0; c < cols_.size(); ++c) {
        for (auto r : col_support_[c]) {
            out(static_cast<Eigen::Index>(c)) += v(static_cast<Eigen::Index>(r));
        }
    }
    return out;
}

IncidenceMatrix build_R(int n, int d) { return {n, d}; }

std::string to_string(Task task) { return task == Task::Pbt ? "pbt" : "est"; }

std::string to_string(Role role) { return role == Role::W ? "w" : "v"; }

FidelityMatrix build_M_pbt(int ports, int d) {
    require_params(ports, d, 1, 2, "build_M_pbt");
    auto index = young::enumerate_diagrams(ports, d);
    std::vector<std::vector<YoungDiagram>> sets;
    sets.reserve(index.size());
    for (const auto &mu : index) {
        sets.push_back(young::remove_box(mu));
    }
    return assemble(Task::Pbt, ports, d, std::move(index), sets);
}

FidelityMatrix build_M_est(int calls, int d) {
    require_params(calls, d, 0, 2, "build_M_est");
    auto index = young::enumerate_diagrams(calls, d);
    std::vector<std::vector<YoungDiagram>> sets;
    sets.reserve(index.size());
    for (const auto &alpha : index) {
        sets.push_back(young::add_box(alpha, d));
    }
    return assemble(Task::Est, calls, d, std::move(index), sets);
}

CoefficientVector::CoefficientVector(Role r, DiagramIndex idx,
                                     Eigen::VectorXd vals)
    : role(r), index(std::move(idx)), values(std::move(vals)) {
    if (static_cast<std::size_t>(values.size()) != index.size()) {
        throw std::invalid_argument("CoefficientVector: size mismatch");
    }
    if (values.size() > 0 && values.minCoeff() < -1e-12) {
        throw std::invalid_argument("CoefficientVector: negative entry");
    }
    if (std::abs(values.norm() - 1.0) > 1e-12) {
        throw std::invalid_argument("CoefficientVector: not unit norm");
    }
}

CoefficientVector CoefficientVector::normalized(Role r, DiagramIndex idx,
                                                Eigen::VectorXd raw) {
    if (static_cast<std::size_t>(raw.size()) != idx.size()) {
        throw std::invalid_argument("CoefficientVector: size mismatch");
    }
    for (Eigen::Index i = 0; i < raw.size(); ++i) {
        if (raw(i) < -1e-12) {
            throw std::invalid_argument("CoefficientVector: negative entry");
        }
        raw(i) = std::max(raw(i), 0.0);
    }
    const double norm = raw.norm();
    if (!(norm > 0.0) || !std::isfinite(norm)) {
        throw std::invalid_argument("CoefficientVector: zero vector");
    }
    return {r, std::move(idx), raw / norm};
}

SymmetricEigen jacobi_eigen(const Eigen::MatrixXd &input, double tol,
                            int max_sweeps) {
    const Eigen::Index k = input.rows();
    Eigen::MatrixXd a = 0.5 * (input + input.transpose());
    Eigen::MatrixXd v = Eigen::MatrixXd::Identity(k, k);
    const double scale = std::max(a.norm(), 1e-300);
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        double off = 0.0;
        for (Eigen::Index p = 0; p < k; ++p) {
            for (Eigen::Index q = p + 1; q < k; ++q) {
                off += a(p, q) * a(p, q);
            }
        }
        if (std::sqrt(off) <= tol * scale) {
            break;
        }
        for (Eigen::Index p = 0; p < k; ++p) {
            for (Eigen::Index q = p + 1; q < k; ++q) {
                if (a(p, q) == 0.0) {
                    continue;
                }
                const double theta = (a(q, q) - a(p, p)) / (2.0 * a(p, q));
                const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (Eigen::Index r = 0; r < k; ++r) {
                    const double arp = a(r, p);
                    const double arq = a(r, q);
                    a(r, p) = c * arp - s * arq;
                    a(r, q) = s * arp + c * arq;
                }
                for (Eigen::Index r = 0; r < k; ++r) {
                    const double apr = a(p, r);
                    const double aqr = a(q, r);
                    a(p, r) = c * apr - s * aqr;
                    a(q, r) = s * apr + c * aqr;
                }
                for (Eigen::Index r = 0; r < k; ++r) {
                    const double vrp = v(r, p);
                    const double vrq = v(r, q);
                    v(r, p) = c * vrp - s * vrq;
                    v(r, q) = s * vrp + c * vrq;
                }
            }
        }
    }
    std::vector<Eigen::Index> order(static_cast<std::size_t>(k));
    for (Eigen::Index i = 0; i < k; ++i) {
        order[static_cast<std::size_t>(i)] = i;
    }
    std::sort(order.begin(), order.end(),
              [&](Eigen::Index x, Eigen::Index y) { return a(x, x) < a(y, y); });
    SymmetricEigen out;
    out.values.resize(k);
    out.vectors.resize(k, k);
    for (Eigen::Index i = 0; i < k; ++i) {
        const auto src = order[static_cast<std::size_t>(i)];
        out.values(i) = a(src, src);
        out.vectors.col(i) = v.col(src);
    }
    return out;
}

SpectralResult max_eig(const FidelityMatrix &m, const EigenOptions &options) {
    const Eigen::Index k = m.values.rows();
    if (k == 0 || m.values.cols() != k) {
        throw std::invalid_argument("max_eig: empty or non-square matrix");
    }
    const Role role = m.kind == Task::Pbt ? Role::W : Role::V;
    const SparseRows sparse(m.values);

    Eigen::VectorXd x = Eigen::VectorXd::Ones(k) / std::sqrt(static_cast<double>(k));
    Eigen::VectorXd y(k);
    double residual = 0.0;
    for (std::size_t it = 1; it <= options.max_iterations; ++it) {
        sparse.apply(x, y);
        const double lambda = x.dot(y);
        residual = (y - lambda * x).norm();
        if (residual <= options.tol) {
            SpectralResult out;
            out.eigenvalue = lambda;
            out.vector = CoefficientVector::normalized(role, m.index,
                                                       clamp_and_normalize(x));
            out.iterations = it;
            out.residual = residual;
            out.method = "power";
            return out;
        }
        const double norm = y.norm();
        if (norm == 0.0) {
            break;
        }
        x = y / norm;
    }

    if (static_cast<std::size_t>(k) <= options.fallback_max_size) {
        const auto eig = jacobi_eigen(m.values);
        const Eigen::VectorXd top = clamp_and_normalize(eig.vectors.col(k - 1));
        sparse.apply(top, y);
        const double lambda = top.dot(y);
        const double r = (y - lambda * top).norm();
        if (r <= options.tol) {
            SpectralResult out;
            out.eigenvalue = lambda;
            out.vector = CoefficientVector::normalized(role, m.index, top);
            out.iterations = options.max_iterations;
            out.residual = r;
            out.method = "jacobi";
            return out;
        }
        residual = std::min(residual, r);
    }
    throw ConvergenceError("max_eig: no convergence within the iteration cap",
                           residual, options.max_iterations);
}

double quadratic_form(const FidelityMatrix &m, const CoefficientVector &x) {
    if (!(x.index == m.index)) {
        throw std::invalid_argument("quadratic_form: index mismatch");
    }
    return x.values.dot(m.values * x.values);
}

double fidelity_pbt(const CoefficientVector &w, int ports, int d) {
    require_index(w, ports, d, "fidelity_pbt");
    return quadratic_form(build_M_pbt(ports, d), w);
}

double fidelity_est(const CoefficientVector &v, int calls, int d) {
    require_index(v, calls, d, "fidelity_est");
    return quadratic_form(build_M_est(calls, d), v);
}

CoefficientVector w_to_v(const CoefficientVector &w, int n, int d) {
    require_index(w, n + 1, d, "w_to_v");
    const auto r = build_R(n, d);
    return CoefficientVector::normalized(Role::V, r.rows(), r.apply(w.values));
}

CoefficientVector v_to_w(const CoefficientVector &v, int n, int d) {
    require_index(v, n, d, "v_to_w");
    const auto r = build_R(n, d);
    return CoefficientVector::normalized(Role::W, r.cols(),
                                         r.apply_transpose(v.values));
}

OptimalPair optimal_vectors_small(int n, int d) {
    require_params(n, d, 0, 1, "optimal_vectors_small");
    if (n >= d) {
        throw std::domain_error(
            "optimal_vectors_small: closed form requires n <= d - 1");
    }
    auto weights = [](const DiagramIndex &index, int boxes) {
        Eigen::VectorXd out(static_cast<Eigen::Index>(index.size()));
        const double norm =
            std::sqrt(young::factorial(boxes).convert_to<double>());
        for (std::size_t i = 0; i < index.size(); ++i) {
            out(static_cast<Eigen::Index>(i)) = young::mult_real(index[i]) / norm;
        }
        return out;
    };
    auto rows = young::enumerate_diagrams(n, d);
    auto cols = young::enumerate_diagrams(n + 1, d);
    OptimalPair out;
    auto v = weights(rows, n);
    auto w = weights(cols, n + 1);
    out.v = CoefficientVector::normalized(Role::V, std::move(rows), std::move(v));
    out.w = CoefficientVector::normalized(Role::W, std::move(cols), std::move(w));
    out.fidelity = static_cast<double>(n + 1) / static_cast<double>(d * d);
    return out;
}

std::vector<ScalingRow> scaling_table(int d, std::span<const int> ports,
                                      const EigenOptions &options) {
    std::vector<ScalingRow> rows;
    rows.reserve(ports.size());
    for (int n : ports) {
        if (n < 2) {
            throw std::invalid_argument("scaling_table: N must be at least 2");
        }
        const auto result = max_eig(build_M_pbt(n, d), options);
        ScalingRow row;
        row.ports = n;
        row.fidelity = result.eigenvalue;
        row.scaled_gap = static_cast<double>(n) * static_cast<double>(n) *
                         (1.0 - result.eigenvalue);
        row.iterations = result.iterations;
        row.residual = result.residual;
        rows.push_back(row);
    }
    return rows;
}

} // namespace portdual::correspondence
