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
 * Brute-force checks of the spectral fidelities: an explicit simulation of
 * the covariant port-based teleportation channel, and a Monte-Carlo
 * evaluation of the estimation fidelity as a Haar character integral.
 *
 * Register layouts. The resource state lives on A_1..A_N B_1..B_N; the
 * measurement acts on A_1..A_N A_0, where A_0 carries the input.
 */

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "portdual/correspondence.hpp"
#include "portdual/tensor.hpp"

namespace portdual::oracle {

using correspondence::CoefficientVector;

struct Caps {
    std::size_t resource_dim = 729;     ///< bound on d^N
    std::size_t measurement_dim = 2187; ///< bound on d^(N+1)
};

/// Thrown when a problem size exceeds the configured caps.
class CapExceeded : public std::length_error {
  public:
    using std::length_error::length_error;
};

/// Normalized state vector; factor 0 is the most significant digit.
struct PureState {
    CVector amplitudes;
    std::vector<int> factor_shape;

    /// Rows index the first `split` factors, columns the rest.
    [[nodiscard]] CMatrix as_matrix(std::size_t split) const;
    [[nodiscard]] DenseOperator density() const;
};

/**
 * @brief (O_w (x) 1)|phi+>^{(x)N} with O_w = sqrt(d^N) sum_mu
 * w_mu / sqrt(d_mu m_mu) P_mu.
 */
[[nodiscard]] PureState resource_state(const CoefficientVector &w, int ports,
                                       int d, const Caps &caps = {});

/**
 * @brief Covariant coefficients w_mu = sqrt(Tr[phi (1_A (x) P_mu)]).
 *
 * The Young projector acts on the port side B_1..B_N, whose reduced state
 * determines the fidelity of every measurement on A.
 */
[[nodiscard]] CoefficientVector extract_w(const PureState &phi, int ports,
                                          int d);
[[nodiscard]] CoefficientVector extract_w(const DenseOperator &phi, int ports,
                                          int d);

enum class DeficitSplit { Equal, First };

/// sigma_a = d^{1-N} (1_{other A} (x) |phi+><phi+|_{A_a A_0}) on A^N A_0.
[[nodiscard]] DenseOperator port_state(int a, int ports, int d);

/**
 * @brief Square-root measurement for {sigma_a}.
 *
 * Pi_a = sigma^{+1/2} sigma_a sigma^{+1/2} with a pseudo-inverse cut at
 * 1e-12 * lambda_max, plus a share of 1 - Pi_supp chosen by `split`.
 */
[[nodiscard]] std::vector<DenseOperator>
srm_povm(int ports, int d, DeficitSplit split = DeficitSplit::Equal,
         const Caps &caps = {});

/// J = sum_ij |i><j| (x) Lambda(|i><j|), input factor first.
struct ChoiMatrix {
    int d_in = 0;
    int d_out = 0;
    DenseOperator matrix;
};

[[nodiscard]] ChoiMatrix choi_from_kraus(const std::vector<CMatrix> &kraus);

/// Simulates the protocol with the given resource and measurement.
[[nodiscard]] ChoiMatrix pbt_channel_choi(const PureState &resource,
                                          const std::vector<DenseOperator> &povm,
                                          int ports, int d,
                                          const Caps &caps = {});

[[nodiscard]] ChoiMatrix pbt_channel_choi(const CoefficientVector &w, int ports,
                                          int d,
                                          DeficitSplit split = DeficitSplit::Equal,
                                          const Caps &caps = {});

/// <<1|J|1>> / d^2.
[[nodiscard]] double channel_fidelity(const ChoiMatrix &j);

struct McEstimate {
    double estimate = 0.0;
    double stderr_ = 0.0;
    std::size_t samples = 0;
    std::size_t resamples = 0;
};

/**
 * @brief Monte-Carlo value of (1/d^2) E_V |Tr V|^2 |sum_a v_a s_a(V)|^2.
 *
 * Samples are split over `partitions` streams seeded from `seed`; results
 * depend only on (seed, samples, partitions).
 */
[[nodiscard]] McEstimate mc_est_fidelity(const CoefficientVector &v, int calls,
                                         int d, std::size_t samples,
                                         std::uint64_t seed,
                                         std::size_t partitions = 4);

struct OracleReport {
    std::string task;
    int n = 0;
    int d = 0;
    double spectral_value = 0.0;
    double oracle_value = 0.0;
    double abs_diff = 0.0;
    std::optional<double> stderr_;
    std::optional<std::size_t> samples;
    std::optional<std::uint64_t> seed;
};

[[nodiscard]] OracleReport compare_pbt(const CoefficientVector &w, int ports,
                                       int d);
[[nodiscard]] OracleReport compare_est(const CoefficientVector &v, int calls,
                                       int d, std::size_t samples,
                                       std::uint64_t seed);

} // namespace portdual::oracle
