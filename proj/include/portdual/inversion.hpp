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
 * Dual certificate for the unitary-inversion fidelity bound (n+1)/d^2.
 *
 * Registers use the layout P, I_1..I_n, O_1..O_n, F. The performance
 * operator is
 *
 *     Omega = d^-2 sum_mu d_mu^-1 sum_ij (E^mu_ij)_{I^n F} (x) (E^mu_ij)_{O^n P}
 *
 * which is the Haar average of |U>><<U|^{(x) n+1} scaled by d^-2.
 */

#pragma once

#include <optional>
#include <vector>

#include "portdual/tensor.hpp"
#include "portdual/young.hpp"

namespace portdual::inversion {

/// Bound on d^(2n+2), the size of the largest operator built.
inline constexpr std::size_t kDefaultCap = 729;

[[nodiscard]] DenseOperator performance_operator(int n, int d,
                                                 std::size_t cap = kDefaultCap);

/// Throws std::domain_error for n >= d.
[[nodiscard]] DenseOperator dual_W(int n, int d, std::size_t cap = kDefaultCap);

struct DualWitness {
    int n = 0;
    int d = 0;
    double lambda = 0.0;
    DenseOperator W;
    DenseOperator omega;
};

[[nodiscard]] DualWitness dual_witness(int n, int d,
                                       std::size_t cap = kDefaultCap);

struct FeasibilityReport {
    int n = 0;
    int d = 0;
    double lambda = 0.0;
    double tol = 1e-9;
    double psd_margin = 0.0;   ///< min eigenvalue of lambda (W (x) 1_F) - Omega
    double trace_gap = 0.0;    ///< |Tr W - d^n|
    std::vector<double> ptrace_residuals; ///< one per slot i = 1..n
    double hermiticity = 0.0;  ///< largest entry of W - W^dagger
    bool verdict = false;
};

[[nodiscard]] FeasibilityReport check_dual_feasibility(int n, int d,
                                                       double tol = 1e-9,
                                                       std::size_t cap = kDefaultCap);

struct CoefficientPair {
    double lhs = 0.0;
    double rhs = 0.0;
};

/**
 * @brief Both sides of the coefficient identity for tableau indices
 * a, b of alpha and c, e of beta (0-based).
 *
 * lhs = (n+1)^-1 sum_{mu in alpha+box cap beta+box} (m_mu/m_alpha)
 *       [tau_mu]_{c_mu a_mu} [tau_mu]_{b_mu e_mu},  tau = (n, n+1);
 * rhs = (m_beta / (n m_lambda)) when a, c restrict to the same tableau
 *       of some lambda and b, e restrict to the same tableau of that
 *       lambda, and 0 otherwise.
 */
[[nodiscard]] CoefficientPair coefficient_A(const young::YoungDiagram &alpha,
                                            const young::YoungDiagram &beta,
                                            std::size_t a, std::size_t b,
                                            std::size_t c, std::size_t e,
                                            int n, int d);

struct CoefficientSweep {
    std::size_t tuples = 0;
    double max_abs_diff = 0.0;
};

/// All (alpha, beta, a, b, c, e) at one (n, d).
[[nodiscard]] CoefficientSweep coefficient_sweep(int n, int d);

struct InversionBound {
    double value = 0.0;
    std::optional<FeasibilityReport> report;
};

/// (n+1)/d^2, certified when d^(2n+2) fits under `cap`.
[[nodiscard]] InversionBound inversion_bound(int n, int d, double tol = 1e-9,
                                             std::size_t cap = kDefaultCap);

} // namespace portdual::inversion
