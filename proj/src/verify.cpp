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


#include "portdual/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "portdual/repsym.hpp"

namespace portdual::verify {

using young::YoungDiagram;

bool Report::passed() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const Check &c) { return c.pass; });
}

namespace {

class Builder {
  public:
    Builder(std::string suite, Report &report, std::optional<double> tol)
        : suite_(std::move(suite)), report_(report), tol_(tol) {}

    void exact(const std::string &name, double value) {
        push(name, value, 0.0);
    }
    void approx(const std::string &name, double value, double tolerance) {
        push(name, value, tol_.value_or(tolerance));
    }
    void fixed(const std::string &name, double value, double tolerance) {
        push(name, value, tolerance);
    }

  private:
    void push(const std::string &name, double value, double tolerance) {
        Check c;
        c.suite = suite_;
        c.name = name;
        c.value = value;
        c.tolerance = tolerance;
        c.pass = std::isfinite(value) && value <= tolerance;
        report_.checks.push_back(std::move(c));
    }

    std::string suite_;
    Report &report_;
    std::optional<double> tol_;
};

template <typename Derived>
double max_abs(const Eigen::MatrixBase<Derived> &m) {
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

std::string at(int n, int d) {
    return "(n=" + std::to_string(n) + ",d=" + std::to_string(d) + ")";
}

void young_suite(const Config &cfg, Report &report) {
    Builder b("young", report, cfg.tol);
    const int n_max = cfg.n_max.value_or(8);
    const int d_max = cfg.d_max.value_or(5);

    double dim_sum = 0.0;
    double regular = 0.0;
    double hooks = 0.0;
    double branching = 0.0;
    double duality = 0.0;
    double addbox = 0.0;
    for (int n = 0; n <= n_max; ++n) {
        for (int d = 1; d <= d_max; ++d) {
            young::BigInt total = 0;
            for (const auto &alpha : young::enumerate_diagrams(n, d)) {
                total += young::dim_u(alpha, d) * young::mult(alpha);
            }
            young::BigInt power = 1;
            for (int k = 0; k < n; ++k) {
                power *= d;
            }
            dim_sum += (total == power) ? 0.0 : 1.0;
        }
        young::BigInt squares = 0;
        for (const auto &alpha : young::enumerate_diagrams(n, std::max(n, 1))) {
            const auto m = young::mult(alpha);
            squares += m * m;
            const auto family = young::standard_tableaux(alpha);
            hooks += (young::BigInt(family.size()) == m) ? 0.0 : 1.0;
            branching += young::check_branching(alpha) ? 0.0 : 1.0;
            for (const auto &mu : young::add_box(alpha)) {
                const auto down = young::remove_box(mu);
                duality += std::count(down.begin(), down.end(), alpha) == 1 ? 0.0 : 1.0;
                const auto &map = family.addbox_map.at(mu);
                const auto upper = young::standard_tableaux(mu);
                for (std::size_t a = 0; a < map.size(); ++a) {
                    addbox += upper.tableaux[map[a]].without_largest() ==
                                      family.tableaux[a]
                                  ? 0.0
                                  : 1.0;
                }
            }
        }
        regular += (squares == young::factorial(n)) ? 0.0 : 1.0;
    }
    const std::string range =
        " n<=" + std::to_string(n_max) + " d<=" + std::to_string(d_max);
    b.exact("sum d_alpha m_alpha = d^n, failures" + range, dim_sum);
    b.exact("sum m_alpha^2 = n!, failures n<=" + std::to_string(n_max), regular);
    b.exact("hook length = tableau count, failures", hooks);
    b.exact("branching sum m_mu = (n+1) m_alpha, failures", branching);
    b.exact("add/remove box duality, failures", duality);
    b.exact("addbox_map restricts back, failures", addbox);
}

void repsym_suite(const Config &cfg, Report &report) {
    using namespace repsym;
    Builder b("repsym", report, cfg.tol);
    const int n_max = cfg.n_max.value_or(4);
    const int d_max = cfg.d_max.value_or(3);
    std::mt19937_64 rng(cfg.seed);

    double relations = 0.0;
    double words = 0.0;
    double homomorphism = 0.0;
    for (int n = 2; n <= std::max(n_max, 6); ++n) {
        for (const auto &frame : young::enumerate_diagrams(n, n)) {
            const OrthogonalIrrep irrep(frame);
            const auto m = static_cast<Eigen::Index>(irrep.dim());
            for (int k = 1; k < n; ++k) {
                const auto &g = irrep.generator(k);
                relations = std::max(relations, max_abs(g * g - RMatrix::Identity(m, m)));
                if (k + 1 < n) {
                    const auto &h = irrep.generator(k + 1);
                    relations = std::max(relations, max_abs(g * h * g - h * g * h));
                }
            }
        }
    }
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 2 + trial % 5;
        const auto s = Permutation::random(n, rng);
        const auto t = Permutation::random(n, rng);
        const auto w1 = reduced_word(s, WordChoice::FirstDescent);
        const auto w2 = reduced_word(s, WordChoice::LastDescent);
        for (const auto &frame : young::enumerate_diagrams(n, n)) {
            const OrthogonalIrrep irrep(frame);
            words = std::max(words, max_abs(irrep.matrix_along(w1) - irrep.matrix_along(w2)));
            homomorphism = std::max(homomorphism, max_abs(irrep.matrix(s) * irrep.matrix(t) -
                                                          irrep.matrix(s * t)));
        }
    }
    b.approx("Coxeter relations of the generators", relations, 1e-12);
    b.approx("two reduced words agree (50 random sigma, n<=6)", words, 1e-12);
    b.approx("homomorphism D(st) = D(s) D(t)", homomorphism, 1e-12);

    double adaptation = 0.0;
    for (int n = 1; n <= n_max; ++n) {
        for (const auto &alpha : young::enumerate_diagrams(n, n)) {
            const OrthogonalIrrep low(alpha);
            for (const auto &mu : young::add_box(alpha)) {
                const OrthogonalIrrep high(mu);
                const auto &map = low.family().addbox_map.at(mu);
                for (const auto &sigma : all_permutations(n)) {
                    const RMatrix a = low.matrix(sigma);
                    const RMatrix h = high.matrix(sigma.extended(n + 1));
                    for (std::size_t i = 0; i < map.size(); ++i) {
                        for (std::size_t j = 0; j < map.size(); ++j) {
                            adaptation = std::max(
                                adaptation,
                                std::abs(h(static_cast<Eigen::Index>(map[i]),
                                           static_cast<Eigen::Index>(map[j])) -
                                         a(static_cast<Eigen::Index>(i),
                                           static_cast<Eigen::Index>(j))));
                        }
                    }
                }
            }
        }
    }
    b.approx("subgroup adaptation under the add-box map", adaptation, 1e-10);

    double algebra = 0.0;
    double completeness = 0.0;
    double traces = 0.0;
    double commutant = 0.0;
    double embedding = 0.0;
    double ptrace = 0.0;
    HaarSampler haar(cfg.seed);
    for (int n = 1; n <= n_max; ++n) {
        for (int d = 2; d <= d_max; ++d) {
            std::vector<MatrixUnitTable> tables;
            for (const auto &mu : young::enumerate_diagrams(n, d)) {
                tables.emplace_back(mu, d);
            }
            const auto dim = static_cast<Eigen::Index>(std::pow(d, n));
            RMatrix sum = RMatrix::Zero(dim, dim);
            const CMatrix u = tensor_power(haar.next(d), n);
            for (std::size_t p = 0; p < tables.size(); ++p) {
                const auto &t = tables[p];
                const double dmu = young::dim_u_real(t.frame(), d);
                for (std::size_t i = 0; i < t.size(); ++i) {
                    sum += t.real(i, i);
                    for (std::size_t j = 0; j < t.size(); ++j) {
                        const auto &e = t.real(i, j);
                        traces = std::max(traces, std::abs(e.trace() - (i == j ? dmu : 0.0)));
                        const CMatrix ec = e.cast<Complex>();
                        commutant = std::max(commutant, max_abs(ec * u - u * ec));
                        for (std::size_t q = 0; q < tables.size(); ++q) {
                            const auto &o = tables[q];
                            for (std::size_t k = 0; k < o.size(); ++k) {
                                for (std::size_t l = 0; l < o.size(); ++l) {
                                    const RMatrix prod = e * o.real(k, l);
                                    const double r = (p == q && j == k)
                                                         ? max_abs(prod - t.real(i, l))
                                                         : max_abs(prod);
                                    algebra = std::max(algebra, r);
                                }
                            }
                        }
                    }
                }
            }
            completeness = std::max(completeness, max_abs(sum - RMatrix::Identity(dim, dim)));

            if (n < n_max) {
                for (const auto &alpha : young::enumerate_diagrams(n, d)) {
                    const auto m = static_cast<std::size_t>(young::mult_real(alpha));
                    for (std::size_t a = 0; a < m; ++a) {
                        for (std::size_t c = 0; c < m; ++c) {
                            embedding = std::max(embedding, embed_unit(alpha, a, c, d).residual);
                        }
                    }
                }
                for (const auto &mu : young::enumerate_diagrams(n + 1, d)) {
                    const MatrixUnitTable upper(mu, d);
                    for (const auto &alpha : young::remove_box(mu)) {
                        const auto fa = young::standard_tableaux(alpha);
                        const MatrixUnitTable lower(alpha, d);
                        const auto &map_a = fa.addbox_map.at(mu);
                        const double ratio =
                            young::dim_u_real(mu, d) / young::dim_u_real(alpha, d);
                        for (const auto &beta : young::remove_box(mu)) {
                            const auto fb = young::standard_tableaux(beta);
                            const auto &map_b = fb.addbox_map.at(mu);
                            for (std::size_t a = 0; a < map_a.size(); ++a) {
                                for (std::size_t c = 0; c < map_b.size(); ++c) {
                                    const std::vector<int> last{n};
                                    const auto traced =
                                        partial_trace(upper.unit(map_a[a], map_b[c]), last);
                                    CMatrix expected = CMatrix::Zero(dim, dim);
                                    if (alpha == beta) {
                                        expected = ratio * lower.unit(a, c).matrix;
                                    }
                                    ptrace = std::max(ptrace, max_abs(traced.matrix - expected));
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    const std::string range =
        " n<=" + std::to_string(n_max) + " d<=" + std::to_string(d_max);
    b.approx("matrix unit products E_ij E_kl = delta_jk E_il" + range, algebra, 1e-10);
    b.approx("matrix unit traces Tr E_ij = delta_ij d_mu", traces, 1e-10);
    b.approx("completeness sum E_ii = 1", completeness, 1e-10);
    b.approx("commutant [E_ij, U^n] = 0", commutant, 1e-10);
    b.approx("embedding E_ab (x) 1 = sum_mu E_(a_mu b_mu)", embedding, 1e-10);
    b.approx("partial trace of E over the last factor", ptrace, 1e-10);

    // |chi|^2 averages to 1 for each irrep
    double worst_sigma = 0.0;
    const int samples = 10000;
    for (const auto &alpha : young::enumerate_diagrams(2, 3)) {
        double sum1 = 0.0;
        double sum2 = 0.0;
        int taken = 0;
        while (taken < samples) {
            const CMatrix v = haar.next(3);
            Eigen::ComplexEigenSolver<CMatrix> es(v);
            std::vector<Complex> eig(es.eigenvalues().data(), es.eigenvalues().data() + 3);
            try {
                const double x = std::norm(schur_char(alpha, eig));
                sum1 += x;
                sum2 += x * x;
                ++taken;
            } catch (const DegenerateSpectrum &) {
            }
        }
        const double mean = sum1 / samples;
        const double se = std::sqrt((sum2 / samples - mean * mean) / (samples - 1));
        worst_sigma = std::max(worst_sigma, std::abs(mean - 1.0) / se);
    }
    b.fixed("character orthogonality, worst |mean-1|/stderr", worst_sigma, 4.0);
}

void correspondence_suite(const Config &cfg, Report &report) {
    using namespace correspondence;
    Builder b("correspondence", report, cfg.tol);
    const int n_max = cfg.n_max.value_or(8);
    const int d_max = cfg.d_max.value_or(5);

    double factor = 0.0;
    double equivalence = 0.0;
    double negative = 0.0;
    for (int n = 0; n <= n_max; ++n) {
        for (int d = 2; d <= d_max; ++d) {
            const Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic> r =
                build_R(n, d).dense().cast<std::int64_t>();
            const auto pbt = build_M_pbt(n + 1, d);
            const auto est = build_M_est(n, d);
            const Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic> rtr =
                r.transpose() * r;
            const Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic> rrt =
                r * r.transpose();
            factor += (rtr == pbt.counts) ? 0.0 : 1.0;
            factor += (rrt == est.counts) ? 0.0 : 1.0;
            const auto sp = max_eig(pbt);
            const auto se = max_eig(est);
            equivalence = std::max(equivalence, std::abs(sp.eigenvalue - se.eigenvalue));
            negative = std::max(negative, -sp.vector.values.minCoeff());
            negative = std::max(negative, -se.vector.values.minCoeff());
        }
    }
    const std::string range =
        " n<=" + std::to_string(n_max) + " d<=" + std::to_string(d_max);
    b.exact("d^2 M_pbt = R^T R and d^2 M_est = R R^T, failures" + range, factor);
    b.approx("|F_pbt(n+1,d) - F_est(n,d)|" + range, equivalence, 1e-10);
    b.approx("Perron vectors nonnegative, worst negative entry", negative, 1e-12);

    const int closed_max = cfg.d_max.value_or(6);
    double closed = 0.0;
    double perron = 0.0;
    for (int d = 2; d <= closed_max; ++d) {
        for (int n = 0; n < d; ++n) {
            const auto r = max_eig(build_M_est(n, d));
            const auto opt = optimal_vectors_small(n, d);
            closed = std::max(closed, std::abs(r.eigenvalue - (n + 1.0) / (d * d)));
            perron = std::max(perron, max_abs(r.vector.values - opt.v.values));
        }
    }
    b.approx("F_est = (n+1)/d^2 for n<=d-1, d<=" + std::to_string(closed_max), closed, 1e-10);
    b.approx("Perron vector = m_alpha / sqrt(n!)", perron, 1e-8);
}

void oracle_suite(const Config &cfg, Report &report) {
    using namespace correspondence;
    Builder b("oracle", report, cfg.tol);
    std::vector<std::pair<int, int>> pbt_grid{{2, 2}, {3, 2}, {4, 2}, {2, 3}, {3, 3}};
    std::vector<std::pair<int, int>> est_grid{{1, 2}, {2, 2}, {2, 3}, {3, 3}};
    if (cfg.n || cfg.d) {
        if (!cfg.n || !cfg.d) {
            throw std::invalid_argument("verify oracle: give both n (or N) and d");
        }
        pbt_grid = {{*cfg.n + 1, *cfg.d}};
        est_grid = {{*cfg.n, *cfg.d}};
    }
    for (auto [ports, d] : pbt_grid) {
        auto index = young::enumerate_diagrams(ports, d);
        Eigen::VectorXd ones = Eigen::VectorXd::Ones(static_cast<Eigen::Index>(index.size()));
        Eigen::VectorXd mults(ones.size());
        for (std::size_t k = 0; k < index.size(); ++k) {
            mults(static_cast<Eigen::Index>(k)) = young::mult_real(index[k]);
        }
        const auto uniform = CoefficientVector::normalized(Role::W, index, ones);
        const auto by_mult = CoefficientVector::normalized(Role::W, index, mults);
        const std::string where =
            "(N=" + std::to_string(ports) + ",d=" + std::to_string(d) + ")";
        b.approx("channel simulation vs w^T M_pbt w, uniform w " + where,
                 oracle::compare_pbt(uniform, ports, d).abs_diff, 1e-8);
        b.approx("channel simulation vs w^T M_pbt w, w ~ m_mu " + where,
                 oracle::compare_pbt(by_mult, ports, d).abs_diff, 1e-8);
    }
    for (auto [n, d] : est_grid) {
        const auto v = max_eig(build_M_est(n, d)).vector;
        const auto r = oracle::compare_est(v, n, d, cfg.samples, cfg.seed);
        b.fixed("Monte-Carlo estimation fidelity, |diff|/stderr " + at(n, d),
                r.abs_diff / *r.stderr_, 4.0);
    }
}

void inversion_suite(const Config &cfg, Report &report) {
    Builder b("inversion", report, cfg.tol);
    std::vector<std::pair<int, int>> grid{{0, 2}, {1, 2}, {1, 3}, {2, 3}};
    if (cfg.n || cfg.d) {
        if (!cfg.n || !cfg.d) {
            throw std::invalid_argument("verify inversion: give both n and d");
        }
        grid = {{*cfg.n, *cfg.d}};
    }
    const double tol = cfg.tol.value_or(1e-9);
    for (auto [n, d] : grid) {
        const auto r = inversion::check_dual_feasibility(n, d, tol);
        const auto where = at(n, d);
        b.fixed("psd margin, -min eig of lambda W (x) 1 - Omega " + where, -r.psd_margin, tol);
        b.fixed("trace gap |Tr W - d^n| " + where, r.trace_gap, std::min(tol, 1e-10));
        double slots = 0.0;
        for (double x : r.ptrace_residuals) {
            slots = std::max(slots, x);
        }
        b.fixed("worst slot partial-trace residual " + where, slots, tol);
        b.fixed("hermiticity of W " + where, r.hermiticity, tol);
        const double primal =
            correspondence::max_eig(correspondence::build_M_est(n, d)).eigenvalue;
        b.approx("certified bound vs spectral optimum " + where,
                 std::abs(inversion::inversion_bound(n, d, tol).value - primal), 1e-10);
    }
    std::vector<std::pair<int, int>> lemma{{1, 2}, {2, 3}, {3, 4}};
    if (cfg.n && cfg.d) {
        lemma.clear();
        if (*cfg.n >= 1) {
            lemma.emplace_back(*cfg.n, *cfg.d);
        }
    }
    for (auto [n, d] : lemma) {
        const auto s = inversion::coefficient_sweep(n, d);
        b.approx("coefficient identity lhs = rhs over " + std::to_string(s.tuples) +
                     " tuples " + at(n, d),
                 s.max_abs_diff, 1e-10);
    }
}

} // namespace

Report run(const std::string &suite, const Config &config) {
    if (suite != "all" &&
        std::find(kSuites.begin(), kSuites.end(), suite) == kSuites.end()) {
        throw std::invalid_argument("unknown suite '" + suite + "'");
    }
    Report report;
    auto wants = [&](const char *name) { return suite == "all" || suite == name; };
    if (wants("young")) {
        young_suite(config, report);
    }
    if (wants("repsym")) {
        repsym_suite(config, report);
    }
    if (wants("correspondence")) {
        correspondence_suite(config, report);
    }
    if (wants("oracle")) {
        oracle_suite(config, report);
    }
    if (wants("inversion")) {
        inversion_suite(config, report);
    }
    return report;
}

io::Json to_json(const Report &report) {
    io::Json out;
    out["passed"] = report.passed();
    io::Json checks = io::Json::array();
    for (const auto &c : report.checks) {
        io::Json j;
        j["suite"] = c.suite;
        j["name"] = c.name;
        j["value"] = io::round12(c.value);
        j["tolerance"] = io::round12(c.tolerance);
        j["margin"] = io::round12(c.margin());
        j["pass"] = c.pass;
        checks.push_back(std::move(j));
    }
    out["checks"] = std::move(checks);
    return out;
}

std::string to_csv(const Report &report) {
    std::string out = io::csv_row({"suite", "name", "value", "tolerance", "margin", "pass"});
    for (const auto &c : report.checks) {
        out += io::csv_row({c.suite, c.name, io::format12(c.value), io::format12(c.tolerance),
                            io::format12(c.margin()), c.pass ? "true" : "false"});
    }
    return out;
}

} // namespace portdual::verify
