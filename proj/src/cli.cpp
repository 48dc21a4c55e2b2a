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


#include "portdual/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"

#include "portdual/correspondence.hpp"
#include "portdual/serialize.hpp"
#include "portdual/verify.hpp"

namespace portdual::cli {

namespace {

using correspondence::Role;
using io::Json;

class UsageError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

class VerificationFailure : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string format;
    std::string out;
    std::string task = "both";
    std::string kind = "pbt";
    std::string n_text;
    std::string N_text;
    std::optional<int> d;
    std::optional<int> d_min;
    std::optional<int> d_max;
    std::optional<int> n_max;
    std::string input;
    std::string direction;
    std::optional<double> tol;
    std::size_t samples = 100000;
    std::uint64_t seed = 2026;
    bool exact = false;
    std::string suite = "all";
};

struct Output {
    std::string text;
    std::string extension;
    int code = kOk;
};

int single(const std::string &text, const char *flag) {
    const auto list = parse_int_list(text);
    if (list.size() != 1) {
        throw UsageError(std::string(flag) + " takes a single value here");
    }
    return list.front();
}

/// Estimation calls n and ports N with N = n + 1.
struct Sizes {
    int n = 0;
    int N = 1;
};

std::optional<Sizes> resolve_sizes(const Options &o) {
    std::optional<int> n;
    std::optional<int> N;
    if (!o.n_text.empty()) {
        n = single(o.n_text, "--n");
    }
    if (!o.N_text.empty()) {
        N = single(o.N_text, "--N");
    }
    if (n && N && *N != *n + 1) {
        throw UsageError("--n and --N disagree: ports must equal calls + 1");
    }
    if (!n && !N) {
        return std::nullopt;
    }
    Sizes s;
    s.n = n ? *n : *N - 1;
    s.N = s.n + 1;
    if (s.n < 0) {
        throw UsageError("--n must be >= 0 and --N >= 1");
    }
    return s;
}

Sizes require_sizes(const Options &o) {
    auto s = resolve_sizes(o);
    if (!s) {
        throw UsageError("give --n (estimation calls) or --N (ports)");
    }
    return *s;
}

int require_d(const Options &o) {
    if (!o.d) {
        throw UsageError("--d is required");
    }
    if (*o.d < 2) {
        throw UsageError("--d must be >= 2");
    }
    return *o.d;
}

correspondence::EigenOptions eigen_options(const Options &o) {
    correspondence::EigenOptions e;
    if (o.tol) {
        e.tol = *o.tol;
    }
    return e;
}

std::string format_of(const Options &o, const char *fallback) {
    const std::string f = o.format.empty() ? fallback : o.format;
    if (f != "json" && f != "csv") {
        throw UsageError("--format must be json or csv");
    }
    return f;
}

std::string dump(const Json &j) { return j.dump(2) + "\n"; }

Json spectral_json(const correspondence::SpectralResult &r) {
    Json out;
    out["fidelity"] = io::round12(r.eigenvalue);
    out["vector"] = io::to_json(r.vector);
    out["iterations"] = r.iterations;
    out["residual"] = io::round12(r.residual);
    out["method"] = r.method;
    return out;
}

Output cmd_fidelity(const Options &o) {
    const auto s = require_sizes(o);
    const int d = require_d(o);
    if (o.task != "pbt" && o.task != "est" && o.task != "both") {
        throw UsageError("--task must be pbt, est or both");
    }
    const auto opts = eigen_options(o);
    std::optional<correspondence::SpectralResult> pbt;
    std::optional<correspondence::SpectralResult> est;
    if (o.task != "est") {
        pbt = correspondence::max_eig(correspondence::build_M_pbt(s.N, d), opts);
    }
    if (o.task != "pbt") {
        est = correspondence::max_eig(correspondence::build_M_est(s.n, d), opts);
    }
    std::optional<double> diff;
    if (pbt && est) {
        diff = std::abs(pbt->eigenvalue - est->eigenvalue);
    }

    Output out;
    out.extension = format_of(o, "json");
    if (out.extension == "json") {
        Json j;
        j["task"] = o.task;
        j["n"] = s.n;
        j["N"] = s.N;
        j["d"] = d;
        if (o.task == "both") {
            j["pbt"] = spectral_json(*pbt);
            j["est"] = spectral_json(*est);
            j["abs_diff"] = io::round12(*diff);
        } else {
            const auto body = spectral_json(pbt ? *pbt : *est);
            for (auto it = body.begin(); it != body.end(); ++it) {
                j[it.key()] = it.value();
            }
        }
        out.text = dump(j);
    } else {
        out.text = io::csv_row({"task", "n", "N", "d", "fidelity", "iterations",
                                "residual", "abs_diff"});
        auto row = [&](const char *task, const correspondence::SpectralResult &r) {
            out.text += io::csv_row({task, std::to_string(s.n), std::to_string(s.N),
                                     std::to_string(d), io::format12(r.eigenvalue),
                                     std::to_string(r.iterations),
                                     io::format12(r.residual),
                                     diff ? io::format12(*diff) : ""});
        };
        if (pbt) {
            row("pbt", *pbt);
        }
        if (est) {
            row("est", *est);
        }
    }
    return out;
}

Output cmd_matrix(const Options &o) {
    const auto s = require_sizes(o);
    const int d = require_d(o);
    correspondence::FidelityMatrix m;
    if (o.kind == "pbt") {
        m = correspondence::build_M_pbt(s.N, d);
    } else if (o.kind == "est") {
        m = correspondence::build_M_est(s.n, d);
    } else {
        throw UsageError("--kind must be pbt or est");
    }
    Output out;
    out.extension = format_of(o, "json");
    out.text = out.extension == "json" ? dump(io::to_json(m)) : io::to_csv(m, o.exact);
    return out;
}

Json read_json_input(const std::string &path) {
    std::string text;
    if (path == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else {
        std::ifstream in(path);
        if (!in) {
            throw UsageError("cannot open input file '" + path + "'");
        }
        text.assign(std::istreambuf_iterator<char>(in), {});
    }
    try {
        return Json::parse(text);
    } catch (const Json::parse_error &e) {
        throw UsageError(std::string("input is not valid JSON: ") + e.what());
    }
}

Output cmd_convert(const Options &o) {
    const auto s = require_sizes(o);
    const int d = require_d(o);
    if (o.input.empty()) {
        throw UsageError("--input is required");
    }
    const Json doc = read_json_input(o.input);
    correspondence::CoefficientVector in;
    correspondence::CoefficientVector result;
    double f_in = 0.0;
    double f_out = 0.0;
    if (o.direction == "w2v") {
        in = io::parse_vector(doc, Role::W, s.N, d);
        result = correspondence::w_to_v(in, s.n, d);
        f_in = correspondence::fidelity_pbt(in, s.N, d);
        f_out = correspondence::fidelity_est(result, s.n, d);
    } else if (o.direction == "v2w") {
        in = io::parse_vector(doc, Role::V, s.n, d);
        result = correspondence::v_to_w(in, s.n, d);
        f_in = correspondence::fidelity_est(in, s.n, d);
        f_out = correspondence::fidelity_pbt(result, s.N, d);
    } else {
        throw UsageError("--direction must be w2v or v2w");
    }
    const bool monotone = f_out >= f_in - 1e-12;

    Output out;
    out.code = monotone ? kOk : kVerificationFailure;
    out.extension = format_of(o, "json");
    if (out.extension == "json") {
        Json j;
        j["direction"] = o.direction;
        j["n"] = s.n;
        j["N"] = s.N;
        j["d"] = d;
        j["input"] = {{"fidelity", io::round12(f_in)}, {"vector", io::to_json(in)}};
        j["output"] = {{"fidelity", io::round12(f_out)}, {"vector", io::to_json(result)}};
        j["monotone"] = monotone;
        out.text = dump(j);
    } else {
        out.text = io::csv_row({"side", "role", "fidelity", "diagram", "value"});
        auto rows = [&](const char *side, const correspondence::CoefficientVector &x,
                        double f) {
            for (std::size_t k = 0; k < x.index.size(); ++k) {
                out.text += io::csv_row({side, correspondence::to_string(x.role),
                                         io::format12(f), x.index[k].to_string(),
                                         io::format12(x.values(static_cast<Eigen::Index>(k)))});
            }
        };
        rows("input", in, f_in);
        rows("output", result, f_out);
    }
    return out;
}

Output cmd_scaling(const Options &o) {
    const int d = require_d(o);
    std::vector<int> ports;
    if (!o.N_text.empty() && !o.n_text.empty()) {
        throw UsageError("scaling takes --N (ports) or --n (calls), not both");
    }
    if (!o.N_text.empty()) {
        ports = parse_int_list(o.N_text);
    } else if (!o.n_text.empty()) {
        for (int n : parse_int_list(o.n_text)) {
            ports.push_back(n + 1);
        }
    } else {
        throw UsageError("give a list of port counts with --N");
    }
    for (int N : ports) {
        if (N < 2) {
            throw UsageError("scaling needs N >= 2");
        }
    }
    const auto opts = eigen_options(o);

    struct Row {
        int N = 0;
        std::optional<correspondence::ScalingRow> row;
        std::string error;
    };
    std::vector<Row> rows;
    bool failed = false;
    for (int N : ports) {
        Row r;
        r.N = N;
        try {
            const std::vector<int> one{N};
            r.row = correspondence::scaling_table(d, one, opts).front();
        } catch (const correspondence::ConvergenceError &e) {
            r.error = e.what();
            failed = true;
        }
        rows.push_back(std::move(r));
    }

    Output out;
    out.code = failed ? kNumericalFailure : kOk;
    out.extension = format_of(o, "csv");
    if (out.extension == "csv") {
        out.text = io::csv_row({"N", "F", "scaled_gap"});
        for (const auto &r : rows) {
            out.text += io::csv_row({std::to_string(r.N),
                                     r.row ? io::format12(r.row->fidelity) : "",
                                     r.row ? io::format12(r.row->scaled_gap) : ""});
        }
    } else {
        Json j;
        j["d"] = d;
        Json list = Json::array();
        for (const auto &r : rows) {
            Json x;
            x["N"] = r.N;
            if (r.row) {
                x["F"] = io::round12(r.row->fidelity);
                x["scaled_gap"] = io::round12(r.row->scaled_gap);
                x["iterations"] = r.row->iterations;
                x["residual"] = io::round12(r.row->residual);
            } else {
                x["error"] = r.error;
            }
            list.push_back(std::move(x));
        }
        j["rows"] = std::move(list);
        out.text = dump(j);
    }
    return out;
}

Output cmd_table(const Options &o) {
    const int d_min = o.d_min.value_or(2);
    const int d_max = o.d_max.value_or(6);
    if (d_min < 2 || d_max < d_min) {
        throw UsageError("need 2 <= --d-min <= --d-max");
    }
    if (o.n_max && *o.n_max < 0) {
        throw UsageError("--n-max must be >= 0");
    }
    const auto opts = eigen_options(o);
    Output out;
    out.extension = format_of(o, "csv");
    Json rows = Json::array();
    std::string csv =
        io::csv_row({"n", "N", "d", "F_est", "F_pbt", "abs_diff", "closed_form"});
    for (int d = d_min; d <= d_max; ++d) {
        const int top = o.n_max.value_or(d - 1);
        for (int n = 0; n <= top; ++n) {
            const double est =
                correspondence::max_eig(correspondence::build_M_est(n, d), opts).eigenvalue;
            const double pbt =
                correspondence::max_eig(correspondence::build_M_pbt(n + 1, d), opts).eigenvalue;
            std::optional<double> closed;
            if (n <= d - 1) {
                closed = (n + 1.0) / (d * d);
            }
            Json r;
            r["n"] = n;
            r["N"] = n + 1;
            r["d"] = d;
            r["F_est"] = io::round12(est);
            r["F_pbt"] = io::round12(pbt);
            r["abs_diff"] = io::round12(std::abs(est - pbt));
            r["closed_form"] = closed ? Json(io::round12(*closed)) : Json(nullptr);
            rows.push_back(std::move(r));
            csv += io::csv_row({std::to_string(n), std::to_string(n + 1), std::to_string(d),
                                io::format12(est), io::format12(pbt),
                                io::format12(std::abs(est - pbt)),
                                closed ? io::format12(*closed) : ""});
        }
    }
    out.text = out.extension == "csv" ? csv : dump(Json{{"rows", rows}});
    return out;
}

Output cmd_verify(const Options &o) {
    verify::Config cfg;
    if (const auto s = resolve_sizes(o)) {
        cfg.n = s->n;
    }
    if (o.d) {
        cfg.d = require_d(o);
    }
    cfg.n_max = o.n_max;
    cfg.d_max = o.d_max;
    if (o.tol && !(*o.tol > 0.0)) {
        throw UsageError("--tol must be positive");
    }
    cfg.tol = o.tol;
    if (o.samples == 0) {
        throw UsageError("--samples must be positive");
    }
    cfg.samples = o.samples;
    cfg.seed = o.seed;
    if (o.suite != "all" &&
        std::find(verify::kSuites.begin(), verify::kSuites.end(), o.suite) ==
            verify::kSuites.end()) {
        throw UsageError("unknown suite '" + o.suite + "'");
    }
    const auto report = verify::run(o.suite, cfg);
    Output out;
    out.code = report.passed() ? kOk : kVerificationFailure;
    out.extension = format_of(o, "json");
    out.text = out.extension == "json" ? dump(verify::to_json(report))
                                       : verify::to_csv(report);
    return out;
}

std::filesystem::path output_path(const Options &o, const std::string &command,
                                  const std::string &extension) {
    const char *env = std::getenv("PORTDUAL_OUT");
    const std::filesystem::path base = (env && *env) ? env : "";
    if (!o.out.empty()) {
        std::filesystem::path p(o.out);
        return (p.is_relative() && !base.empty()) ? base / p : p;
    }
    if (!base.empty()) {
        return base / (command + "." + extension);
    }
    return {};
}

void add_common(CLI::App *sub, Options &o) {
    sub->add_option("--format", o.format, "json or csv");
    sub->add_option("--out", o.out, "output file (default: stdout or $PORTDUAL_OUT)");
}

void add_sizes(CLI::App *sub, Options &o) {
    sub->add_option("--n", o.n_text, "estimation calls n");
    sub->add_option("--N", o.N_text, "ports N = n + 1");
    sub->add_option("--d", o.d, "local dimension");
    sub->add_option("--tol", o.tol, "tolerance");
}

} // namespace

std::vector<int> parse_int_list(const std::string &text) {
    auto to_int = [&](const std::string &piece) {
        std::size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(piece, &used);
        } catch (const std::exception &) {
            throw UsageError("not an integer: '" + piece + "'");
        }
        if (used != piece.size()) {
            throw UsageError("not an integer: '" + piece + "'");
        }
        return value;
    };
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) {
            throw UsageError("empty entry in list '" + text + "'");
        }
        const auto c1 = item.find(':');
        if (c1 == std::string::npos) {
            out.push_back(to_int(item));
            continue;
        }
        const auto c2 = item.find(':', c1 + 1);
        const int lo = to_int(item.substr(0, c1));
        const int hi = to_int(item.substr(c1 + 1, c2 == std::string::npos
                                                       ? std::string::npos
                                                       : c2 - c1 - 1));
        const int step = c2 == std::string::npos ? 1 : to_int(item.substr(c2 + 1));
        if (step <= 0 || hi < lo) {
            throw UsageError("bad range '" + item + "'");
        }
        for (int x = lo; x <= hi; x += step) {
            out.push_back(x);
        }
    }
    if (out.empty()) {
        throw UsageError("empty list");
    }
    return out;
}

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    Options o;
    CLI::App app{"Port-based teleportation and unitary estimation fidelities", "portdual"};
    app.require_subcommand(1);

    auto *fidelity = app.add_subcommand("fidelity", "optimal fidelity by the spectral method");
    add_common(fidelity, o);
    add_sizes(fidelity, o);
    fidelity->add_option("--task", o.task, "pbt, est or both");

    auto *matrix = app.add_subcommand("matrix", "fidelity matrix M_pbt or M_est");
    add_common(matrix, o);
    add_sizes(matrix, o);
    matrix->add_option("--kind", o.kind, "pbt or est");
    matrix->add_flag("--exact", o.exact, "CSV of the integers d^2 M");

    auto *convert = app.add_subcommand("convert", "map a protocol vector to the other task");
    add_common(convert, o);
    add_sizes(convert, o);
    convert->add_option("--direction", o.direction, "w2v or v2w")->required();
    convert->add_option("--input", o.input, "JSON vector file, '-' for stdin")->required();

    auto *scaling = app.add_subcommand("scaling", "N, F and N^2 (1 - F) over a port list");
    add_common(scaling, o);
    add_sizes(scaling, o);

    auto *table = app.add_subcommand("table", "F_est, F_pbt and the closed form over a grid");
    add_common(table, o);
    table->add_option("--d-min", o.d_min, "smallest d (default 2)");
    table->add_option("--d-max", o.d_max, "largest d (default 6)");
    table->add_option("--n-max", o.n_max, "largest n (default d - 1)");
    table->add_option("--tol", o.tol, "eigensolver tolerance");

    auto *verify_cmd = app.add_subcommand("verify", "run invariant suites");
    add_common(verify_cmd, o);
    add_sizes(verify_cmd, o);
    verify_cmd->add_option("--suite", o.suite,
                           "young, repsym, correspondence, oracle, inversion or all");
    verify_cmd->add_option("--n-max", o.n_max, "largest n checked");
    verify_cmd->add_option("--d-max", o.d_max, "largest d checked");
    verify_cmd->add_option("--samples", o.samples, "Monte-Carlo samples");
    verify_cmd->add_option("--seed", o.seed, "Monte-Carlo seed");

    std::vector<const char *> argv{"portdual"};
    for (const auto &a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsageError;
    }

    std::string command;
    Output result;
    try {
        if (fidelity->parsed()) {
            command = "fidelity";
            result = cmd_fidelity(o);
        } else if (matrix->parsed()) {
            command = "matrix";
            result = cmd_matrix(o);
        } else if (convert->parsed()) {
            command = "convert";
            result = cmd_convert(o);
        } else if (scaling->parsed()) {
            command = "scaling";
            result = cmd_scaling(o);
        } else if (table->parsed()) {
            command = "table";
            result = cmd_table(o);
        } else {
            command = "verify";
            result = cmd_verify(o);
        }
    } catch (const correspondence::ConvergenceError &e) {
        err << "numerical failure: " << e.what() << " (residual " << e.last_residual
            << " after " << e.iterations << " iterations)\n";
        return kNumericalFailure;
    } catch (const std::invalid_argument &e) {
        err << "usage error: " << e.what() << "\n";
        return kUsageError;
    } catch (const std::domain_error &e) {
        err << "usage error: " << e.what() << "\n";
        return kUsageError;
    } catch (const std::out_of_range &e) {
        err << "usage error: " << e.what() << "\n";
        return kUsageError;
    } catch (const std::length_error &e) {
        err << "usage error: " << e.what() << "\n";
        return kUsageError;
    } catch (const std::exception &e) {
        err << "numerical failure: " << e.what() << "\n";
        return kNumericalFailure;
    }

    const auto path = output_path(o, command, result.extension);
    if (path.empty()) {
        out << result.text;
    } else {
        std::error_code ec;
        if (path.has_parent_path()) {
            std::filesystem::create_directories(path.parent_path(), ec);
        }
        std::ofstream file(path, std::ios::binary);
        if (!file || !(file << result.text)) {
            err << "usage error: cannot write '" << path.string() << "'\n";
            return kUsageError;
        }
        err << "wrote " << path.string() << "\n";
    }
    return result.code;
}

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    std::vector<std::string> args;
    for (int k = 1; k < argc; ++k) {
        args.emplace_back(argv[k]);
    }
    return run(args, out, err);
}

} // namespace portdual::cli
