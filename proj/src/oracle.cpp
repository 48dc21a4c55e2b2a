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

#include "portdual/oracle.hpp"

#include <cmath>
#include <numeric>
#include <thread>

#include <Eigen/Eigenvalues>

#include "portdual/repsym.hpp"

namespace portdual::oracle {

namespace {

using RowMajorC =
    Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

std::size_t ipow(int base, int exp) {
    std::size_t out = 1;
    for (int k = 0; k < exp; ++k) {
        out *= static_cast<std::size_t>(base);
    }
    return out;
}

void check_cap(std::size_t value, std::size_t cap, const char *what) {
    if (value > cap) {
        throw CapExceeded(std::string(what) + " exceeds the dimension cap");
    }
}

void require_index(const CoefficientVector &x, int n, int d, const char *who) {
    if (!(x.index == young::enumerate_diagrams(n, d))) {
        throw std::invalid_argument(std::string(who) +
                                    ": vector index does not match (n, d)");
    }
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

} // namespace

CMatrix PureState::as_matrix(std::size_t split) const {
    if (split > factor_shape.size()) {
        throw std::invalid_argument("PureState::as_matrix: bad split");
    }
    const std::span<const int> shape(factor_shape);
    const auto rows = static_cast<Eigen::Index>(shape_dim(shape.first(split)));
    const auto cols = static_cast<Eigen::Index>(shape_dim(shape.subspan(split)));
    return Eigen::Map<const RowMajorC>(amplitudes.data(), rows, cols);
}

DenseOperator PureState::density() const {
    return {amplitudes * amplitudes.adjoint(), factor_shape};
}

PureState resource_state(const CoefficientVector &w, int ports, int d,
                         const Caps &caps) {
    require_index(w, ports, d, "resource_state");
    const std::size_t dim = ipow(d, ports);
    check_cap(dim, caps.resource_dim, "resource_state: d^N");
    CMatrix amp = CMatrix::Zero(static_cast<Eigen::Index>(dim),
                                static_cast<Eigen::Index>(dim));
    for (std::size_t k = 0; k < w.index.size(); ++k) {
        const double wk = w.values(static_cast<Eigen::Index>(k));
        if (wk == 0.0) {
            continue;
        }
        const auto &mu = w.index[k];
        const double c =
            wk / std::sqrt(young::dim_u_real(mu, d) * young::mult_real(mu));
        amp += c * repsym::young_projector(mu, d).matrix;
    }
    PureState out;
    out.factor_shape.assign(static_cast<std::size_t>(2 * ports), d);
    out.amplitudes.resize(static_cast<Eigen::Index>(dim * dim));
    Eigen::Map<RowMajorC>(out.amplitudes.data(), amp.rows(), amp.cols()) = amp;
    return out;
}

CoefficientVector extract_w(const PureState &phi, int ports, int d) {
    const auto n = static_cast<std::size_t>(ports);
    if (phi.factor_shape != std::vector<int>(2 * n, d)) {
        throw std::invalid_argument("extract_w: state shape does not match");
    }
    const CMatrix amp = phi.as_matrix(n);
    const CMatrix gram = amp.adjoint() * amp;
    auto index = young::enumerate_diagrams(ports, d);
    Eigen::VectorXd w(static_cast<Eigen::Index>(index.size()));
    for (std::size_t k = 0; k < index.size(); ++k) {
        const double t = (gram * repsym::young_projector(index[k], d).matrix)
                             .trace()
                             .real();
        w(static_cast<Eigen::Index>(k)) = std::sqrt(std::max(t, 0.0));
    }
    return CoefficientVector::normalized(correspondence::Role::W,
                                         std::move(index), w);
}

CoefficientVector extract_w(const DenseOperator &phi, int ports, int d) {
    const auto n = static_cast<std::size_t>(ports);
    if (phi.factor_shape != std::vector<int>(2 * n, d)) {
        throw std::invalid_argument("extract_w: operator shape does not match");
    }
    std::vector<int> a_side(n);
    std::iota(a_side.begin(), a_side.end(), 0);
    const auto rho_b = partial_trace(phi, a_side);
    auto index = young::enumerate_diagrams(ports, d);
    Eigen::VectorXd w(static_cast<Eigen::Index>(index.size()));
    for (std::size_t k = 0; k < index.size(); ++k) {
        const double t =
            (rho_b.matrix * repsym::young_projector(index[k], d).matrix)
                .trace()
                .real();
        w(static_cast<Eigen::Index>(k)) = std::sqrt(std::max(t, 0.0));
    }
    return CoefficientVector::normalized(correspondence::Role::W,
                                         std::move(index), w);
}

DenseOperator port_state(int a, int ports, int d) {
    if (a < 0 || a >= ports) {
        throw std::out_of_range("port_state: port index");
    }
    const std::vector<int> shape(static_cast<std::size_t>(ports + 1), d);
    const std::size_t dim = shape_dim(shape);
    const double scale = 1.0 / static_cast<double>(ipow(d, ports));
    CMatrix out = CMatrix::Zero(static_cast<Eigen::Index>(dim),
                                static_cast<Eigen::Index>(dim));
    const auto pa = static_cast<std::size_t>(a);
    const auto p0 = static_cast<std::size_t>(ports);
    for (std::size_t x = 0; x < dim; ++x) {
        auto dx = unflatten(x, shape);
        if (dx[pa] != dx[p0]) {
            continue;
        }
        for (int k = 0; k < d; ++k) {
            auto dy = dx;
            dy[pa] = k;
            dy[p0] = k;
            out(static_cast<Eigen::Index>(flatten(dy, shape)),
                static_cast<Eigen::Index>(x)) = scale;
        }
    }
    return {std::move(out), shape};
}

std::vector<DenseOperator> srm_povm(int ports, int d, DeficitSplit split,
                                    const Caps &caps) {
    if (ports < 1 || d < 1) {
        throw std::invalid_argument("srm_povm: parameters out of range");
    }
    check_cap(ipow(d, ports + 1), caps.measurement_dim, "srm_povm: d^(N+1)");
    std::vector<RMatrix> parts;
    parts.reserve(static_cast<std::size_t>(ports));
    for (int a = 0; a < ports; ++a) {
        parts.push_back(port_state(a, ports, d).matrix.real());
    }
    RMatrix sigma = std::accumulate(std::next(parts.begin()), parts.end(),
                                    RMatrix(parts.front()));
    Eigen::SelfAdjointEigenSolver<RMatrix> es(sigma);
    const auto &vals = es.eigenvalues();
    const double cutoff = 1e-12 * vals.maxCoeff();
    Eigen::VectorXd inv_sqrt(vals.size());
    Eigen::VectorXd support(vals.size());
    for (Eigen::Index i = 0; i < vals.size(); ++i) {
        const bool on = vals(i) > cutoff;
        inv_sqrt(i) = on ? 1.0 / std::sqrt(vals(i)) : 0.0;
        support(i) = on ? 1.0 : 0.0;
    }
    const RMatrix &u = es.eigenvectors();
    const RMatrix root = u * inv_sqrt.asDiagonal() * u.transpose();
    const RMatrix deficit =
        RMatrix::Identity(sigma.rows(), sigma.cols()) -
        u * support.asDiagonal() * u.transpose();

    const std::vector<int> shape(static_cast<std::size_t>(ports + 1), d);
    std::vector<DenseOperator> povm;
    povm.reserve(parts.size());
    for (int a = 0; a < ports; ++a) {
        RMatrix pi = root * parts[static_cast<std::size_t>(a)] * root;
        if (split == DeficitSplit::Equal) {
            pi += deficit / static_cast<double>(ports);
        } else if (a == 0) {
            pi += deficit;
        }
        povm.emplace_back(pi.cast<Complex>(), shape);
    }
    return povm;
}

ChoiMatrix choi_from_kraus(const std::vector<CMatrix> &kraus) {
    if (kraus.empty()) {
        throw std::invalid_argument("choi_from_kraus: no Kraus operators");
    }
    const auto d_out = static_cast<int>(kraus.front().rows());
    const auto d_in = static_cast<int>(kraus.front().cols());
    CMatrix j = CMatrix::Zero(d_in * d_out, d_in * d_out);
    for (const auto &k : kraus) {
        CVector vec(d_in * d_out);
        for (int i = 0; i < d_in; ++i) {
            for (int o = 0; o < d_out; ++o) {
                vec(i * d_out + o) = k(o, i);
            }
        }
        j += vec * vec.adjoint();
    }
    return {d_in, d_out, DenseOperator(std::move(j), {d_in, d_out})};
}

ChoiMatrix pbt_channel_choi(const PureState &resource,
                            const std::vector<DenseOperator> &povm, int ports,
                            int d, const Caps &caps) {
    const auto n = static_cast<std::size_t>(ports);
    if (resource.factor_shape != std::vector<int>(2 * n, d)) {
        throw std::invalid_argument("pbt_channel_choi: resource shape");
    }
    if (povm.size() != n) {
        throw std::invalid_argument("pbt_channel_choi: need one element per port");
    }
    const std::size_t half = ipow(d, ports);
    const std::size_t big = half * static_cast<std::size_t>(d);
    check_cap(big, caps.measurement_dim, "pbt_channel_choi: d^(N+1)");

    // rows (A^N, A_0), columns (R, B^N); the input is maximally entangled
    // with R, unnormalized so that the result is the Choi matrix itself.
    const CMatrix amp = resource.as_matrix(n);
    CMatrix m = CMatrix::Zero(static_cast<Eigen::Index>(big),
                              static_cast<Eigen::Index>(big));
    const auto h = static_cast<Eigen::Index>(half);
    for (Eigen::Index x = 0; x < h; ++x) {
        for (int i = 0; i < d; ++i) {
            m.row(x * d + i).segment(i * h, h) = amp.row(x);
        }
    }

    std::vector<int> out_shape(n + 1, d);
    CMatrix total = CMatrix::Zero(d * d, d * d);
    for (std::size_t a = 0; a < n; ++a) {
        CMatrix joint = (m.adjoint() * povm[a].matrix * m).conjugate();
        std::vector<int> traced;
        for (std::size_t b = 0; b < n; ++b) {
            if (b != a) {
                traced.push_back(static_cast<int>(b + 1));
            }
        }
        total += partial_trace(DenseOperator(std::move(joint), out_shape), traced)
                     .matrix;
    }
    return {d, d, DenseOperator(std::move(total), {d, d})};
}

ChoiMatrix pbt_channel_choi(const CoefficientVector &w, int ports, int d,
                            DeficitSplit split, const Caps &caps) {
    return pbt_channel_choi(resource_state(w, ports, d, caps),
                            srm_povm(ports, d, split, caps), ports, d, caps);
}

double channel_fidelity(const ChoiMatrix &j) {
    if (j.d_in != j.d_out) {
        throw std::invalid_argument("channel_fidelity: d_in != d_out");
    }
    const int d = j.d_in;
    Complex acc = 0.0;
    for (int i = 0; i < d; ++i) {
        for (int k = 0; k < d; ++k) {
            acc += j.matrix.matrix(i * d + i, k * d + k);
        }
    }
    return acc.real() / static_cast<double>(d * d);
}

McEstimate mc_est_fidelity(const CoefficientVector &v, int calls, int d,
                           std::size_t samples, std::uint64_t seed,
                           std::size_t partitions) {
    require_index(v, calls, d, "mc_est_fidelity");
    if (samples == 0 || partitions == 0) {
        throw std::invalid_argument("mc_est_fidelity: samples and partitions must be positive");
    }
    partitions = std::min(partitions, samples);
    struct Partial {
        double sum = 0.0;
        double sum2 = 0.0;
        std::size_t resamples = 0;
        std::exception_ptr error;
    };
    std::vector<Partial> partial(partitions);
    const young::YoungDiagram box({1});

    auto work = [&](std::size_t p) {
        try {
            const std::size_t count =
                samples / partitions + (p < samples % partitions ? 1 : 0);
            repsym::HaarSampler sampler(splitmix64(seed ^ splitmix64(p)));
            std::vector<Complex> eig(static_cast<std::size_t>(d));
            for (std::size_t s = 0; s < count; ++s) {
                for (int attempt = 0;; ++attempt) {
                    if (attempt >= 100) {
                        throw std::runtime_error(
                            "mc_est_fidelity: persistent degenerate spectra");
                    }
                    Eigen::ComplexEigenSolver<CMatrix> es(sampler.next(d), false);
                    std::copy(es.eigenvalues().data(),
                              es.eigenvalues().data() + d, eig.begin());
                    try {
                        Complex mix = 0.0;
                        for (std::size_t k = 0; k < v.index.size(); ++k) {
                            const double c = v.values(static_cast<Eigen::Index>(k));
                            if (c != 0.0) {
                                mix += c * repsym::schur_char(v.index[k], eig);
                            }
                        }
                        const Complex tr = repsym::schur_char(box, eig);
                        const double f =
                            std::norm(tr) * std::norm(mix) / (d * d);
                        partial[p].sum += f;
                        partial[p].sum2 += f * f;
                        break;
                    } catch (const repsym::DegenerateSpectrum &) {
                        ++partial[p].resamples;
                    }
                }
            }
        } catch (...) {
            partial[p].error = std::current_exception();
        }
    };

    std::vector<std::thread> threads;
    threads.reserve(partitions);
    for (std::size_t p = 0; p < partitions; ++p) {
        threads.emplace_back(work, p);
    }
    for (auto &t : threads) {
        t.join();
    }
    McEstimate out;
    double sum = 0.0;
    double sum2 = 0.0;
    for (const auto &part : partial) {
        if (part.error) {
            std::rethrow_exception(part.error);
        }
        sum += part.sum;
        sum2 += part.sum2;
        out.resamples += part.resamples;
    }
    const auto ns = static_cast<double>(samples);
    out.samples = samples;
    out.estimate = sum / ns;
    const double var = std::max(sum2 / ns - out.estimate * out.estimate, 0.0);
    out.stderr_ = samples > 1 ? std::sqrt(var / (ns - 1.0)) : 0.0;
    return out;
}

OracleReport compare_pbt(const CoefficientVector &w, int ports, int d) {
    OracleReport r;
    r.task = "pbt";
    r.n = ports;
    r.d = d;
    r.spectral_value = correspondence::fidelity_pbt(w, ports, d);
    r.oracle_value = channel_fidelity(pbt_channel_choi(w, ports, d));
    r.abs_diff = std::abs(r.spectral_value - r.oracle_value);
    return r;
}

OracleReport compare_est(const CoefficientVector &v, int calls, int d,
                         std::size_t samples, std::uint64_t seed) {
    OracleReport r;
    r.task = "est";
    r.n = calls;
    r.d = d;
    r.spectral_value = correspondence::fidelity_est(v, calls, d);
    const auto mc = mc_est_fidelity(v, calls, d, samples, seed);
    r.oracle_value = mc.estimate;
    r.abs_diff = std::abs(r.spectral_value - r.oracle_value);
    r.stderr_ = mc.stderr_;
    r.samples = samples;
    r.seed = seed;
    return r;
}

} // namespace portdual::oracle
