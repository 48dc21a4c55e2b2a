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

#include "portdual/tensor.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace portdual {

std::size_t shape_dim(std::span<const int> shape) {
    std::size_t dim = 1;
    for (int s : shape) {
        dim *= static_cast<std::size_t>(s);
    }
    return dim;
}

DenseOperator::DenseOperator(CMatrix m, std::vector<int> shape)
    : matrix(std::move(m)), factor_shape(std::move(shape)) {
    const auto dim = shape_dim(factor_shape);
    if (static_cast<std::size_t>(matrix.rows()) != dim ||
        static_cast<std::size_t>(matrix.cols()) != dim) {
        throw std::invalid_argument(
            "DenseOperator: matrix size does not match factor shape");
    }
}

DenseOperator DenseOperator::identity(std::vector<int> shape) {
    const auto dim = static_cast<Eigen::Index>(shape_dim(shape));
    return {CMatrix::Identity(dim, dim), std::move(shape)};
}

DenseOperator DenseOperator::zero(std::vector<int> shape) {
    const auto dim = static_cast<Eigen::Index>(shape_dim(shape));
    return {CMatrix::Zero(dim, dim), std::move(shape)};
}

CMatrix kron(const CMatrix &a, const CMatrix &b) {
    CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) =
                a(i, j) * b;
        }
    }
    return out;
}

DenseOperator kron(const DenseOperator &a, const DenseOperator &b) {
    std::vector<int> shape = a.factor_shape;
    shape.insert(shape.end(), b.factor_shape.begin(), b.factor_shape.end());
    return {kron(a.matrix, b.matrix), std::move(shape)};
}

std::vector<int> unflatten(std::size_t index, std::span<const int> shape) {
    std::vector<int> digits(shape.size());
    for (std::size_t k = shape.size(); k-- > 0;) {
        const auto s = static_cast<std::size_t>(shape[k]);
        digits[k] = static_cast<int>(index % s);
        index /= s;
    }
    return digits;
}

std::size_t flatten(std::span<const int> digits, std::span<const int> shape) {
    std::size_t index = 0;
    for (std::size_t k = 0; k < shape.size(); ++k) {
        index = index * static_cast<std::size_t>(shape[k]) +
                static_cast<std::size_t>(digits[k]);
    }
    return index;
}

DenseOperator permute_factors(const DenseOperator &op,
                              std::span<const int> order) {
    const auto &shape = op.factor_shape;
    if (order.size() != shape.size()) {
        throw std::invalid_argument("permute_factors: order has wrong length");
    }
    std::vector<int> seen(shape.size(), 0);
    std::vector<int> new_shape(shape.size());
    for (std::size_t k = 0; k < order.size(); ++k) {
        const auto src = static_cast<std::size_t>(order[k]);
        if (src >= shape.size() || seen[src]++ != 0) {
            throw std::invalid_argument("permute_factors: not a permutation");
        }
        new_shape[k] = shape[src];
    }
    const std::size_t dim = op.dim();
    std::vector<std::size_t> map(dim);
    std::vector<int> digits(shape.size());
    for (std::size_t x = 0; x < dim; ++x) {
        auto old_digits = unflatten(x, shape);
        for (std::size_t k = 0; k < order.size(); ++k) {
            digits[k] = old_digits[static_cast<std::size_t>(order[k])];
        }
        map[x] = flatten(digits, new_shape);
    }
    CMatrix out(op.matrix.rows(), op.matrix.cols());
    for (std::size_t c = 0; c < dim; ++c) {
        for (std::size_t r = 0; r < dim; ++r) {
            out(static_cast<Eigen::Index>(map[r]),
                static_cast<Eigen::Index>(map[c])) =
                op.matrix(static_cast<Eigen::Index>(r),
                          static_cast<Eigen::Index>(c));
        }
    }
    return {std::move(out), std::move(new_shape)};
}

DenseOperator partial_trace(const DenseOperator &op,
                            std::span<const int> traced) {
    const auto &shape = op.factor_shape;
    std::vector<bool> is_traced(shape.size(), false);
    for (int t : traced) {
        if (t < 0 || static_cast<std::size_t>(t) >= shape.size() ||
            is_traced[static_cast<std::size_t>(t)]) {
            throw std::invalid_argument("partial_trace: bad factor list");
        }
        is_traced[static_cast<std::size_t>(t)] = true;
    }
    std::vector<int> kept_shape;
    std::vector<int> traced_shape;
    for (std::size_t k = 0; k < shape.size(); ++k) {
        (is_traced[k] ? traced_shape : kept_shape).push_back(shape[k]);
    }
    const std::size_t kept_dim = shape_dim(kept_shape);
    const std::size_t traced_dim = shape_dim(traced_shape);

    // full index for (kept digits, traced digits)
    std::vector<std::size_t> full(kept_dim * traced_dim);
    std::vector<int> digits(shape.size());
    for (std::size_t a = 0; a < kept_dim; ++a) {
        auto kd = unflatten(a, kept_shape);
        for (std::size_t t = 0; t < traced_dim; ++t) {
            auto td = unflatten(t, traced_shape);
            std::size_t ki = 0;
            std::size_t ti = 0;
            for (std::size_t k = 0; k < shape.size(); ++k) {
                digits[k] = is_traced[k] ? td[ti++] : kd[ki++];
            }
            full[a * traced_dim + t] = flatten(digits, shape);
        }
    }
    const auto kd = static_cast<Eigen::Index>(kept_dim);
    CMatrix out = CMatrix::Zero(kd, kd);
    for (std::size_t c = 0; c < kept_dim; ++c) {
        for (std::size_t r = 0; r < kept_dim; ++r) {
            Complex acc = 0.0;
            for (std::size_t t = 0; t < traced_dim; ++t) {
                acc += op.matrix(
                    static_cast<Eigen::Index>(full[r * traced_dim + t]),
                    static_cast<Eigen::Index>(full[c * traced_dim + t]));
            }
            out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
                acc;
        }
    }
    return {std::move(out), std::move(kept_shape)};
}

DenseOperator insert_identity(const DenseOperator &op, int at, int dim) {
    const int count = static_cast<int>(op.factor_shape.size());
    if (at < 0 || at > count) {
        throw std::invalid_argument("insert_identity: position out of range");
    }
    auto extended = kron(op, DenseOperator::identity({dim}));
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(count + 1));
    for (int k = 0; k < at; ++k) {
        order.push_back(k);
    }
    order.push_back(count);
    for (int k = at; k < count; ++k) {
        order.push_back(k);
    }
    return permute_factors(extended, order);
}

double min_eigenvalue(const CMatrix &a) {
    if (max_imag(a) == 0.0) {
        const RMatrix re = a.real();
        Eigen::SelfAdjointEigenSolver<RMatrix> solver(
            0.5 * (re + re.transpose()), Eigen::EigenvaluesOnly);
        return solver.eigenvalues().minCoeff();
    }
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(0.5 * (a + a.adjoint()),
                                                  Eigen::EigenvaluesOnly);
    return solver.eigenvalues().minCoeff();
}

double hermiticity_defect(const CMatrix &a) {
    return (a - a.adjoint()).cwiseAbs().maxCoeff();
}

double max_imag(const CMatrix &a) {
    return a.size() == 0 ? 0.0 : a.imag().cwiseAbs().maxCoeff();
}

double frobenius(const CMatrix &a) { return a.norm(); }

} // namespace portdual
