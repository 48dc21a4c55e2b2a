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
 * Teleportation and estimation matrices built from the box-adding incidence
 * matrix R(n, d), their top eigenpairs, and the maps that carry an optimal
 * teleportation resource to an optimal estimation probe and back.
 *
 * With R the |Y^d_n| x |Y^d_{n+1}| incidence of mu in alpha + box,
 *
 *     d^2 M_pbt(n+1, d) = R^T R,     d^2 M_est(n, d) = R R^T,
 *
 * so both matrices share their nonzero spectrum and the same top eigenvalue.
 */

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "portdual/young.hpp"

namespace portdual::correspondence {

using young::DiagramIndex;
using young::YoungDiagram;

/// Sparse 0/1 incidence between Y^d_n (rows) and Y^d_{n+1} (columns).
class IncidenceMatrix {
  public:
    IncidenceMatrix(int n, int d);

    [[nodiscard]] int n() const { return n_; }
    [[nodiscard]] int d() const { return d_; }
    [[nodiscard]] const DiagramIndex &rows() const { return rows_; }
    [[nodiscard]] const DiagramIndex &cols() const { return cols_; }
    /// Row indices alpha with column mu in alpha + box.
    [[nodiscard]] const std::vector<std::size_t> &
    column_support(std::size_t col) const {
        return col_support_[col];
    }
    [[nodiscard]] int entry(std::size_t row, std::size_t col) const;
    [[nodiscard]] Eigen::MatrixXi dense() const;

    [[nodiscard]] Eigen::VectorXd apply(const Eigen::VectorXd &w) const;
    [[nodiscard]] Eigen::VectorXd apply_transpose(const Eigen::VectorXd &v) const;

  private:
    int n_;
    int d_;
    DiagramIndex rows_;
    DiagramIndex cols_;
    std::vector<std::vector<std::size_t>> col_support_;
};

[[nodiscard]] IncidenceMatrix build_R(int n, int d);

enum class Task { Pbt, Est };

[[nodiscard]] std::string to_string(Task task);

/**
 * @brief d^-2 times an integer intersection-count matrix.
 *
 * For Task::Pbt, `n` is the port count N; for Task::Est it is the number of
 * calls. `counts` holds the exact integers (d^2 times the entries).
 */
struct FidelityMatrix {
    Task kind = Task::Pbt;
    int n = 0;
    int d = 2;
    DiagramIndex index;
    Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic> counts;
    Eigen::MatrixXd values;

    [[nodiscard]] std::size_t size() const { return index.size(); }
};

/// (1/d^2) #(mu - box  cap  nu - box) over Y^d_N.
[[nodiscard]] FidelityMatrix build_M_pbt(int ports, int d);
/// (1/d^2) #(alpha + box  cap  beta + box  cap  Y^d_{n+1}) over Y^d_n.
[[nodiscard]] FidelityMatrix build_M_est(int calls, int d);

enum class Role { W, V };

[[nodiscard]] std::string to_string(Role role);

/// Nonnegative unit vector over a diagram index.
struct CoefficientVector {
    Role role = Role::W;
    DiagramIndex index;
    Eigen::VectorXd values;

    CoefficientVector() = default;
    /// Throws std::invalid_argument on size mismatch, negative entries
    /// (below -1e-12) or a norm off by more than 1e-12.
    CoefficientVector(Role role, DiagramIndex index, Eigen::VectorXd values);

    /// Normalizes and clamps tiny negatives; throws on a zero vector.
    static CoefficientVector normalized(Role role, DiagramIndex index,
                                        Eigen::VectorXd raw);
};

/// Thrown when power iteration exhausts its cap without a fallback.
class ConvergenceError : public std::runtime_error {
  public:
    ConvergenceError(const std::string &what, double residual,
                     std::size_t iterations)
        : std::runtime_error(what), last_residual(residual),
          iterations(iterations) {}
    double last_residual;
    std::size_t iterations;
};

struct SpectralResult {
    double eigenvalue = 0.0;
    CoefficientVector vector;
    std::size_t iterations = 0;
    double residual = 0.0;
    std::string method; ///< "power" or "jacobi"
};

struct EigenOptions {
    double tol = 1e-12;
    std::size_t max_iterations = 1'000'000;
    /// Full symmetric eigendecomposition is tried after the cap when the
    /// matrix has at most this many rows.
    std::size_t fallback_max_size = 64;
};

/**
 * @brief Top eigenpair of a nonnegative symmetric fidelity matrix.
 *
 * Power iteration from the all-ones vector; converged when
 * ||Mx - lambda x|| <= tol with lambda the Rayleigh quotient. Falls back to
 * cyclic Jacobi sweeps for small matrices, otherwise throws
 * ConvergenceError.
 */
[[nodiscard]] SpectralResult max_eig(const FidelityMatrix &m,
                                     const EigenOptions &options = {});

/// All eigenvalues and eigenvectors of a small symmetric matrix, by cyclic
/// Jacobi rotations. Eigenvalues ascend; eigenvectors are columns.
struct SymmetricEigen {
    Eigen::VectorXd values;
    Eigen::MatrixXd vectors;
};
[[nodiscard]] SymmetricEigen jacobi_eigen(const Eigen::MatrixXd &a,
                                          double tol = 1e-15,
                                          int max_sweeps = 100);

[[nodiscard]] double quadratic_form(const FidelityMatrix &m,
                                    const CoefficientVector &x);

[[nodiscard]] double fidelity_pbt(const CoefficientVector &w, int ports, int d);
[[nodiscard]] double fidelity_est(const CoefficientVector &v, int calls, int d);

/// v = R w / ||R w||, with w over Y^d_{n+1}.
[[nodiscard]] CoefficientVector w_to_v(const CoefficientVector &w, int n, int d);
/// w = R^T v / ||R^T v||, with v over Y^d_n.
[[nodiscard]] CoefficientVector v_to_w(const CoefficientVector &v, int n, int d);

struct OptimalPair {
    CoefficientVector w;
    CoefficientVector v;
    double fidelity = 0.0;
};

/// w_mu = m_mu / sqrt((n+1)!), v_alpha = m_alpha / sqrt(n!), F = (n+1)/d^2.
/// Throws std::domain_error for n >= d.
[[nodiscard]] OptimalPair optimal_vectors_small(int n, int d);

struct ScalingRow {
    int ports = 0;
    double fidelity = 0.0;
    double scaled_gap = 0.0; ///< N^2 (1 - F)
    std::size_t iterations = 0;
    double residual = 0.0;
};

[[nodiscard]] std::vector<ScalingRow>
scaling_table(int d, std::span<const int> ports, const EigenOptions &options = {});

} // namespace portdual::correspondence
