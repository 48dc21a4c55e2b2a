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
 * Explicit representation theory of the symmetric and unitary groups on
 * small tensor powers: permutation operators, Young's orthogonal form,
 * Young projectors, matrix units, Schur characters and Haar sampling.
 */

#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>
#include <vector>

#include "portdual/tensor.hpp"
#include "portdual/young.hpp"

namespace portdual::repsym {

/**
 * @brief A bijection of {1..n}, stored as its image list.
 *
 * Products compose right to left: (s * t)(i) == s(t(i)).
 */
class Permutation {
  public:
    /// `images[i-1]` is the image of i. Throws unless bijective.
    explicit Permutation(std::vector<int> images);

    static Permutation identity(int n);
    /// The adjacent transposition s_k = (k, k+1), 1 <= k < n.
    static Permutation adjacent(int n, int k);
    static Permutation transposition(int n, int i, int j);
    static Permutation random(int n, std::mt19937_64 &rng);

    [[nodiscard]] int size() const { return static_cast<int>(images_.size()); }
    [[nodiscard]] int operator()(int i) const {
        return images_[static_cast<std::size_t>(i - 1)];
    }
    [[nodiscard]] const std::vector<int> &images() const { return images_; }

    [[nodiscard]] Permutation operator*(const Permutation &rhs) const;
    [[nodiscard]] Permutation inverse() const;
    [[nodiscard]] int sign() const;
    [[nodiscard]] int cycle_count() const;
    [[nodiscard]] bool is_identity() const;
    /// Same permutation viewed in S_m (m >= n), fixing n+1..m.
    [[nodiscard]] Permutation extended(int m) const;

    bool operator==(const Permutation &) const = default;

  private:
    std::vector<int> images_;
};

/// All of S_n in lexicographic order of image lists.
[[nodiscard]] std::vector<Permutation> all_permutations(int n);

enum class WordChoice { FirstDescent, LastDescent };

/**
 * @brief A reduced word k_1 ... k_l with sigma = s_{k_1} * ... * s_{k_l}.
 *
 * Two choices give (generally) different words for the same permutation,
 * which is what the well-definedness checks compare.
 */
[[nodiscard]] std::vector<int> reduced_word(const Permutation &sigma,
                                            WordChoice choice);

/**
 * @brief Young's orthogonal form of one irrep of S_n.
 *
 * Basis vectors are the standard tableaux of the frame, in the canonical
 * tableau order. The generator for s_k has diagonal entry 1/r and couples
 * T with s_k T by sqrt(1 - 1/r^2), where r = content(k+1) - content(k).
 */
class OrthogonalIrrep {
  public:
    explicit OrthogonalIrrep(young::YoungDiagram frame);

    [[nodiscard]] const young::YoungDiagram &frame() const {
        return family_.frame;
    }
    [[nodiscard]] const young::StandardTableauFamily &family() const {
        return family_;
    }
    [[nodiscard]] std::size_t dim() const { return family_.size(); }
    [[nodiscard]] int degree() const { return family_.frame.boxes(); }

    /// Generator for s_k, 1 <= k < n.
    [[nodiscard]] const RMatrix &generator(int k) const;
    [[nodiscard]] RMatrix matrix(const Permutation &sigma) const;
    [[nodiscard]] RMatrix matrix_along(std::span<const int> word) const;

  private:
    young::StandardTableauFamily family_;
    std::vector<RMatrix> generators_;
};

[[nodiscard]] RMatrix irrep_matrix(const Permutation &sigma,
                                   const young::YoungDiagram &frame);

/**
 * @brief Basis map of V_sigma on (C^d)^{tensor n}.
 *
 * V_sigma |x> = |map[x]>; the digit at position q moves to position
 * sigma(q).
 */
[[nodiscard]] std::vector<std::size_t>
permutation_index_map(const Permutation &sigma, int d);

[[nodiscard]] DenseOperator perm_matrix(const Permutation &sigma, int d);

/// Isotypic projector; the zero operator when depth(alpha) > d.
[[nodiscard]] DenseOperator young_projector(const young::YoungDiagram &alpha,
                                            int d);

/**
 * @brief All matrix units E^mu_ij of one frame on (C^d)^{tensor n}.
 *
 * E^mu_ij = (m_mu / n!) sum_sigma D^mu(sigma)_ij V_sigma. Indices are
 * 0-based tableau positions. For n == 0 the register has no factors and
 * the single unit is the 1x1 identity.
 */
class MatrixUnitTable {
  public:
    MatrixUnitTable(const young::YoungDiagram &mu, int d);

    [[nodiscard]] const young::YoungDiagram &frame() const { return frame_; }
    [[nodiscard]] std::size_t size() const { return size_; }
    [[nodiscard]] int local_dim() const { return d_; }
    /// Real matrix of E_ij; throws std::out_of_range on bad indices.
    [[nodiscard]] const RMatrix &real(std::size_t i, std::size_t j) const;
    [[nodiscard]] DenseOperator unit(std::size_t i, std::size_t j) const;

  private:
    young::YoungDiagram frame_;
    int d_;
    std::size_t size_;
    std::vector<RMatrix> units_;
};

[[nodiscard]] DenseOperator matrix_unit(const young::YoungDiagram &mu,
                                        std::size_t i, std::size_t j, int d);

struct EmbeddedUnit {
    DenseOperator embedded; ///< E^alpha_ab (x) 1_d
    DenseOperator branched; ///< sum over mu in alpha+box of E^mu_{a_mu b_mu}
    double residual = 0.0;  ///< Frobenius norm of the difference
};

/// Throws std::logic_error if the two sides differ by more than 1e-9.
[[nodiscard]] EmbeddedUnit embed_unit(const young::YoungDiagram &alpha,
                                      std::size_t a, std::size_t b, int d);

/// Raised by schur_char when two eigenvalues nearly coincide; callers
/// draw a fresh sample.
class DegenerateSpectrum : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Schur polynomial s_alpha(x_1..x_d) by the bialternant formula.
[[nodiscard]] Complex schur_char(const young::YoungDiagram &alpha,
                                 std::span<const Complex> eigenvalues);

/**
 * @brief Haar-distributed U(d) sampler owning one seeded generator.
 *
 * QR of a complex Ginibre matrix with the phases of diag(R) moved into Q.
 * Not safe to share between threads.
 */
class HaarSampler {
  public:
    explicit HaarSampler(std::uint64_t seed) : rng_(seed) {}
    [[nodiscard]] CMatrix next(int d);

  private:
    std::mt19937_64 rng_;
};

[[nodiscard]] DenseOperator haar_unitary(int d, std::uint64_t seed);

/// U^{tensor n} as a plain matrix.
[[nodiscard]] CMatrix tensor_power(const CMatrix &u, int n);

} // namespace portdual::repsym
