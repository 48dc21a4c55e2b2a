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
 * Dense complex operators on tensor-product registers and the factor
 * bookkeeping (Kronecker products, partial traces, factor permutations)
 * used by the brute-force oracles.
 */

#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace portdual {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RMatrix = Eigen::MatrixXd;

/// Product of local dimensions.
[[nodiscard]] std::size_t shape_dim(std::span<const int> shape);

/**
 * @brief Complex square matrix acting on a register of tensor factors.
 *
 * Factor 0 is the most significant digit of the computational-basis index.
 */
struct DenseOperator {
    CMatrix matrix;
    std::vector<int> factor_shape;

    DenseOperator() = default;
    DenseOperator(CMatrix m, std::vector<int> shape);

    [[nodiscard]] std::size_t dim() const {
        return static_cast<std::size_t>(matrix.rows());
    }

    static DenseOperator identity(std::vector<int> shape);
    static DenseOperator zero(std::vector<int> shape);
};

[[nodiscard]] DenseOperator kron(const DenseOperator &a, const DenseOperator &b);
[[nodiscard]] CMatrix kron(const CMatrix &a, const CMatrix &b);

/**
 * @brief Reorders tensor factors.
 *
 * Factor k of the result is factor order[k] of the input.
 */
[[nodiscard]] DenseOperator permute_factors(const DenseOperator &op,
                                            std::span<const int> order);

/// Traces out the listed factors; remaining factors keep their order.
[[nodiscard]] DenseOperator partial_trace(const DenseOperator &op,
                                          std::span<const int> traced);

/// Inserts an identity factor of dimension `dim` at position `at`.
[[nodiscard]] DenseOperator insert_identity(const DenseOperator &op, int at,
                                            int dim);

/// Smallest eigenvalue of the Hermitian part (A + A^dagger) / 2.
[[nodiscard]] double min_eigenvalue(const CMatrix &a);

/// Largest absolute entry of A - A^dagger.
[[nodiscard]] double hermiticity_defect(const CMatrix &a);

/// Largest absolute entry of the imaginary part.
[[nodiscard]] double max_imag(const CMatrix &a);

[[nodiscard]] double frobenius(const CMatrix &a);

/// Splits a flat index into digits of the given shape (factor 0 first).
[[nodiscard]] std::vector<int> unflatten(std::size_t index,
                                         std::span<const int> shape);
[[nodiscard]] std::size_t flatten(std::span<const int> digits,
                                  std::span<const int> shape);

} // namespace portdual
