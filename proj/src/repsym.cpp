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

#include "portdual/repsym.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <Eigen/LU>
#include <Eigen/QR>

namespace portdual::repsym {

using young::BigInt;
using young::YoungDiagram;

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<bool> hit(images_.size(), false);
    for (int v : images_) {
        if (v < 1 || v > size() || hit[static_cast<std::size_t>(v - 1)]) {
            throw std::invalid_argument("Permutation: images not a bijection");
        }
        hit[static_cast<std::size_t>(v - 1)] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> images(static_cast<std::size_t>(n));
    std::iota(images.begin(), images.end(), 1);
    return Permutation(std::move(images));
}

Permutation Permutation::transposition(int n, int i, int j) {
    auto images = identity(n).images_;
    std::swap(images.at(static_cast<std::size_t>(i - 1)),
              images.at(static_cast<std::size_t>(j - 1)));
    return Permutation(std::move(images));
}

Permutation Permutation::adjacent(int n, int k) {
    if (k < 1 || k >= n) {
        throw std::invalid_argument("Permutation::adjacent: k out of range");
    }
    return transposition(n, k, k + 1);
}

Permutation Permutation::random(int n, std::mt19937_64 &rng) {
    auto images = identity(n).images_;
    std::shuffle(images.begin(), images.end(), rng);
    return Permutation(std::move(images));
}

Permutation Permutation::operator*(const Permutation &rhs) const {
    if (rhs.size() != size()) {
        throw std::invalid_argument("Permutation: size mismatch");
    }
    std::vector<int> images(images_.size());
    for (int i = 1; i <= size(); ++i) {
        images[static_cast<std::size_t>(i - 1)] = (*this)(rhs(i));
    }
    return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
    std::vector<int> images(images_.size());
    for (int i = 1; i <= size(); ++i) {
        images[static_cast<std::size_t>((*this)(i)-1)] = i;
    }
    return Permutation(std::move(images));
}

int Permutation::cycle_count() const {
    std::vector<bool> seen(images_.size(), false);
    int cycles = 0;
    for (int i = 1; i <= size(); ++i) {
        if (seen[static_cast<std::size_t>(i - 1)]) {
            continue;
        }
        ++cycles;
        for (int j = i; !seen[static_cast<std::size_t>(j - 1)]; j = (*this)(j)) {
            seen[static_cast<std::size_t>(j - 1)] = true;
        }
    }
    return cycles;
}

int Permutation::sign() const {
    return ((size() - cycle_count()) % 2 == 0) ? 1 : -1;
}

bool Permutation::is_identity() const {
    for (int i = 1; i <= size(); ++i) {
        if ((*this)(i) != i) {
            return false;
        }
    }
    return true;
}

Permutation Permutation::extended(int m) const {
    if (m < size()) {
        throw std::invalid_argument("Permutation::extended: m < n");
    }
    auto images = images_;
    for (int i = size() + 1; i <= m; ++i) {
        images.push_back(i);
    }
    return Permutation(std::move(images));
}

std::vector<Permutation> all_permutations(int n) {
    std::vector<Permutation> out;
    auto images = Permutation::identity(n).images();
    do {
        out.emplace_back(images);
    } while (std::next_permutation(images.begin(), images.end()));
    return out;
}

std::vector<int> reduced_word(const Permutation &sigma, WordChoice choice) {
    // Peel right descents: sigma = sigma' * s_j with one inversion fewer.
    Permutation current = sigma;
    std::vector<int> peeled;
    const int n = sigma.size();
    while (!current.is_identity()) {
        int j = 0;
        if (choice == WordChoice::FirstDescent) {
            for (j = 1; j < n && current(j) < current(j + 1); ++j) {
            }
        } else {
            for (j = n - 1; j >= 1 && current(j) < current(j + 1); --j) {
            }
        }
        current = current * Permutation::adjacent(n, j);
        peeled.push_back(j);
    }
    std::reverse(peeled.begin(), peeled.end());
    return peeled;
}

OrthogonalIrrep::OrthogonalIrrep(YoungDiagram frame)
    : family_(young::standard_tableaux(frame)) {
    const int n = frame.boxes();
    const auto m = static_cast<Eigen::Index>(family_.size());
    generators_.reserve(static_cast<std::size_t>(std::max(n - 1, 0)));
    for (int k = 1; k < n; ++k) {
        RMatrix g = RMatrix::Zero(m, m);
        for (Eigen::Index t = 0; t < m; ++t) {
            const auto &tab = family_.tableaux[static_cast<std::size_t>(t)];
            const int r = tab.content(k + 1) - tab.content(k);
            g(t, t) = 1.0 / r;
            if (r == 1 || r == -1) {
                continue;
            }
            young::Tableau swapped = tab;
            for (auto &row : swapped.rows) {
                for (auto &label : row) {
                    if (label == k) {
                        label = k + 1;
                    } else if (label == k + 1) {
                        label = k;
                    }
                }
            }
            const auto s = static_cast<Eigen::Index>(
                family_.index_of(swapped).value());
            g(s, t) = std::sqrt(1.0 - 1.0 / (static_cast<double>(r) * r));
        }
        generators_.push_back(std::move(g));
    }
}

const RMatrix &OrthogonalIrrep::generator(int k) const {
    if (k < 1 || k >= degree()) {
        throw std::out_of_range("OrthogonalIrrep: generator index");
    }
    return generators_[static_cast<std::size_t>(k - 1)];
}

RMatrix OrthogonalIrrep::matrix_along(std::span<const int> word) const {
    const auto m = static_cast<Eigen::Index>(dim());
    RMatrix out = RMatrix::Identity(m, m);
    for (int k : word) {
        out = out * generator(k);
    }
    return out;
}

RMatrix OrthogonalIrrep::matrix(const Permutation &sigma) const {
    if (sigma.size() != degree()) {
        throw std::invalid_argument("OrthogonalIrrep: permutation degree");
    }
    return matrix_along(reduced_word(sigma, WordChoice::FirstDescent));
}

RMatrix irrep_matrix(const Permutation &sigma, const YoungDiagram &frame) {
    return OrthogonalIrrep(frame).matrix(sigma);
}

std::vector<std::size_t> permutation_index_map(const Permutation &sigma,
                                               int d) {
    const int n = sigma.size();
    const std::vector<int> shape(static_cast<std::size_t>(n), d);
    const std::size_t dim = shape_dim(shape);
    std::vector<std::size_t> map(dim);
    std::vector<int> moved(static_cast<std::size_t>(n));
    for (std::size_t x = 0; x < dim; ++x) {
        auto digits = unflatten(x, shape);
        for (int q = 1; q <= n; ++q) {
            moved[static_cast<std::size_t>(sigma(q) - 1)] =
                digits[static_cast<std::size_t>(q - 1)];
        }
        map[x] = flatten(moved, shape);
    }
    return map;
}

DenseOperator perm_matrix(const Permutation &sigma, int d) {
    const auto map = permutation_index_map(sigma, d);
    const auto dim = static_cast<Eigen::Index>(map.size());
    CMatrix out = CMatrix::Zero(dim, dim);
    for (std::size_t x = 0; x < map.size(); ++x) {
        out(static_cast<Eigen::Index>(map[x]), static_cast<Eigen::Index>(x)) =
            1.0;
    }
    return {std::move(out),
            std::vector<int>(static_cast<std::size_t>(sigma.size()), d)};
}

namespace {

double inverse_factorial(int n) {
    return 1.0 / young::factorial(n).convert_to<double>();
}

} // namespace

DenseOperator young_projector(const YoungDiagram &alpha, int d) {
    const int n = alpha.boxes();
    std::vector<int> shape(static_cast<std::size_t>(n), d);
    if (alpha.depth() > d) {
        return DenseOperator::zero(std::move(shape));
    }
    const OrthogonalIrrep irrep(alpha);
    const double scale =
        static_cast<double>(irrep.dim()) * inverse_factorial(n);
    const auto dim = static_cast<Eigen::Index>(shape_dim(shape));
    RMatrix acc = RMatrix::Zero(dim, dim);
    for (const auto &sigma : all_permutations(n)) {
        const double chi = irrep.matrix(sigma).trace();
        if (chi == 0.0) {
            continue;
        }
        const auto map = permutation_index_map(sigma, d);
        for (std::size_t x = 0; x < map.size(); ++x) {
            acc(static_cast<Eigen::Index>(map[x]),
                static_cast<Eigen::Index>(x)) += scale * chi;
        }
    }
    return {acc.cast<Complex>(), std::move(shape)};
}

MatrixUnitTable::MatrixUnitTable(const YoungDiagram &mu, int d)
    : frame_(mu), d_(d), size_(0) {
    const int n = mu.boxes();
    const OrthogonalIrrep irrep(mu);
    size_ = irrep.dim();
    const std::vector<int> shape(static_cast<std::size_t>(n), d);
    const auto dim = static_cast<Eigen::Index>(shape_dim(shape));
    units_.assign(size_ * size_, RMatrix::Zero(dim, dim));
    const double scale = static_cast<double>(size_) * inverse_factorial(n);
    for (const auto &sigma : all_permutations(n)) {
        const RMatrix rep = irrep.matrix(sigma);
        const auto map = permutation_index_map(sigma, d);
        for (std::size_t i = 0; i < size_; ++i) {
            for (std::size_t j = 0; j < size_; ++j) {
                const double c = scale * rep(static_cast<Eigen::Index>(i),
                                             static_cast<Eigen::Index>(j));
                if (c == 0.0) {
                    continue;
                }
                auto &unit = units_[i * size_ + j];
                for (std::size_t x = 0; x < map.size(); ++x) {
                    unit(static_cast<Eigen::Index>(map[x]),
                         static_cast<Eigen::Index>(x)) += c;
                }
            }
        }
    }
}

const RMatrix &MatrixUnitTable::real(std::size_t i, std::size_t j) const {
    if (i >= size_ || j >= size_) {
        throw std::out_of_range("matrix unit index out of range");
    }
    return units_[i * size_ + j];
}

DenseOperator MatrixUnitTable::unit(std::size_t i, std::size_t j) const {
    return {real(i, j).cast<Complex>(),
            std::vector<int>(static_cast<std::size_t>(frame_.boxes()), d_)};
}

DenseOperator matrix_unit(const YoungDiagram &mu, std::size_t i, std::size_t j,
                          int d) {
    const auto m = young::mult(mu);
    if (BigInt(i) >= m || BigInt(j) >= m) {
        throw std::out_of_range("matrix_unit: tableau index out of range");
    }
    return MatrixUnitTable(mu, d).unit(i, j);
}

EmbeddedUnit embed_unit(const YoungDiagram &alpha, std::size_t a,
                        std::size_t b, int d) {
    const auto family = young::standard_tableaux(alpha);
    const MatrixUnitTable base(alpha, d);
    EmbeddedUnit out;
    out.embedded = kron(base.unit(a, b), DenseOperator::identity({d}));
    out.branched = DenseOperator::zero(out.embedded.factor_shape);
    for (const auto &mu : young::add_box(alpha, d)) {
        const auto &map = family.addbox_map.at(mu);
        const MatrixUnitTable upper(mu, d);
        out.branched.matrix += upper.real(map[a], map[b]).cast<Complex>();
    }
    out.residual = frobenius(out.embedded.matrix - out.branched.matrix);
    if (out.residual > 1e-9) {
        throw std::logic_error("embed_unit: branching identity violated");
    }
    return out;
}

Complex schur_char(const YoungDiagram &alpha,
                   std::span<const Complex> eigenvalues) {
    const int d = static_cast<int>(eigenvalues.size());
    if (alpha.depth() > d) {
        throw std::invalid_argument("schur_char: depth exceeds variable count");
    }
    for (int i = 0; i < d; ++i) {
        for (int j = i + 1; j < d; ++j) {
            if (std::abs(eigenvalues[static_cast<std::size_t>(i)] -
                         eigenvalues[static_cast<std::size_t>(j)]) < 1e-8) {
                throw DegenerateSpectrum("schur_char: near-degenerate spectrum");
            }
        }
    }
    if (alpha.empty()) {
        return 1.0;
    }
    CMatrix num(d, d);
    CMatrix den(d, d);
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            const Complex x = eigenvalues[static_cast<std::size_t>(j)];
            num(i, j) = std::pow(x, alpha.row(i) + d - 1 - i);
            den(i, j) = std::pow(x, d - 1 - i);
        }
    }
    return num.determinant() / den.determinant();
}

CMatrix HaarSampler::next(int d) {
    std::normal_distribution<double> gauss(0.0, 1.0 / std::sqrt(2.0));
    CMatrix z(d, d);
    for (int j = 0; j < d; ++j) {
        for (int i = 0; i < d; ++i) {
            const double re = gauss(rng_);
            const double im = gauss(rng_);
            z(i, j) = Complex(re, im);
        }
    }
    Eigen::HouseholderQR<CMatrix> qr(z);
    CMatrix q = qr.householderQ() * CMatrix::Identity(d, d);
    const CMatrix &r = qr.matrixQR();
    for (int j = 0; j < d; ++j) {
        const Complex diag = r(j, j);
        const double mag = std::abs(diag);
        q.col(j) *= (mag > 0.0) ? diag / mag : Complex(1.0);
    }
    return q;
}

DenseOperator haar_unitary(int d, std::uint64_t seed) {
    if (d < 1) {
        throw std::invalid_argument("haar_unitary: d must be positive");
    }
    HaarSampler sampler(seed);
    return {sampler.next(d), {d}};
}

CMatrix tensor_power(const CMatrix &u, int n) {
    CMatrix out = CMatrix::Identity(1, 1);
    for (int k = 0; k < n; ++k) {
        out = kron(out, u);
    }
    return out;
}

} // namespace portdual::repsym
