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


#include "portdual/serialize.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>

namespace portdual::io {

double round12(double x) {
    if (!std::isfinite(x)) {
        return x;
    }
    return std::strtod(format12(x).c_str(), nullptr);
}

std::string format12(double x) {
    if (x == 0.0) {
        return "0";
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

std::string csv_field(const std::string &text) {
    if (text.find_first_of(",\"\r\n") == std::string::npos) {
        return text;
    }
    std::string out = "\"";
    for (char c : text) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    out += '"';
    return out;
}

std::string csv_row(const std::vector<std::string> &fields) {
    std::string out;
    for (std::size_t k = 0; k < fields.size(); ++k) {
        if (k > 0) {
            out += ',';
        }
        out += csv_field(fields[k]);
    }
    out += "\r\n";
    return out;
}

Json to_json(const young::YoungDiagram &alpha) {
    Json out = Json::array();
    for (int r : alpha.rows()) {
        out.push_back(r);
    }
    return out;
}

Json to_json(const young::DiagramIndex &index) {
    Json out = Json::array();
    for (const auto &alpha : index) {
        out.push_back(to_json(alpha));
    }
    return out;
}

namespace {

Json real_array(const Eigen::VectorXd &v) {
    Json out = Json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        out.push_back(round12(v(i)));
    }
    return out;
}

} // namespace

Json to_json(const correspondence::CoefficientVector &x) {
    Json out;
    out["role"] = correspondence::to_string(x.role);
    out["boxes"] = x.index.n();
    out["d"] = x.index.d();
    out["index"] = to_json(x.index);
    out["values"] = real_array(x.values);
    return out;
}

Json to_json(const correspondence::FidelityMatrix &m) {
    Json out;
    out["kind"] = correspondence::to_string(m.kind);
    out["n"] = m.n;
    out["d"] = m.d;
    out["index"] = to_json(m.index);
    Json entries = Json::array();
    Json counts = Json::array();
    for (Eigen::Index i = 0; i < m.values.rows(); ++i) {
        entries.push_back(real_array(m.values.row(i).transpose()));
        Json row = Json::array();
        for (Eigen::Index j = 0; j < m.counts.cols(); ++j) {
            row.push_back(m.counts(i, j));
        }
        counts.push_back(std::move(row));
    }
    out["entries"] = std::move(entries);
    out["scale"] = m.d * m.d;
    out["counts"] = std::move(counts);
    return out;
}

Json to_json(const correspondence::SpectralResult &r) {
    Json out;
    out["eigenvalue"] = round12(r.eigenvalue);
    out["vector"] = to_json(r.vector);
    out["iterations"] = r.iterations;
    out["residual"] = round12(r.residual);
    out["method"] = r.method;
    return out;
}

Json to_json(const oracle::OracleReport &r) {
    Json out;
    out["task"] = r.task;
    out["n"] = r.n;
    out["d"] = r.d;
    out["spectral_value"] = round12(r.spectral_value);
    out["oracle_value"] = round12(r.oracle_value);
    out["abs_diff"] = round12(r.abs_diff);
    if (r.stderr_) {
        out["stderr"] = round12(*r.stderr_);
    }
    if (r.samples) {
        out["samples"] = *r.samples;
    }
    if (r.seed) {
        out["seed"] = *r.seed;
    }
    return out;
}

Json to_json(const inversion::FeasibilityReport &r) {
    Json out;
    out["n"] = r.n;
    out["d"] = r.d;
    out["lambda"] = round12(r.lambda);
    out["tol"] = round12(r.tol);
    out["psd_margin"] = round12(r.psd_margin);
    out["trace_gap"] = round12(r.trace_gap);
    Json res = Json::array();
    for (double x : r.ptrace_residuals) {
        res.push_back(round12(x));
    }
    out["ptrace_residuals"] = std::move(res);
    out["hermiticity"] = round12(r.hermiticity);
    out["verdict"] = r.verdict;
    return out;
}

std::string to_csv(const correspondence::FidelityMatrix &m, bool exact) {
    std::vector<std::string> header;
    for (const auto &alpha : m.index) {
        header.push_back(alpha.to_string());
    }
    std::string out = csv_row(header);
    for (Eigen::Index i = 0; i < m.values.rows(); ++i) {
        std::vector<std::string> row;
        for (Eigen::Index j = 0; j < m.values.cols(); ++j) {
            row.push_back(exact ? std::to_string(m.counts(i, j))
                                : format12(m.values(i, j)));
        }
        out += csv_row(row);
    }
    return out;
}

correspondence::CoefficientVector parse_vector(const Json &doc,
                                               correspondence::Role role,
                                               int n, int d) {
    auto index = young::enumerate_diagrams(n, d);
    const Json *values = &doc;
    if (doc.is_object()) {
        if (!doc.contains("values")) {
            throw std::invalid_argument("vector input: missing \"values\"");
        }
        values = &doc.at("values");
        if (doc.contains("index") && doc.at("index") != to_json(index)) {
            throw std::invalid_argument(
                "vector input: index does not match the canonical diagram order");
        }
    }
    if (!values->is_array()) {
        throw std::invalid_argument("vector input: values must be an array");
    }
    if (values->size() != index.size()) {
        throw std::invalid_argument("vector input: expected " +
                                    std::to_string(index.size()) +
                                    " values, got " +
                                    std::to_string(values->size()));
    }
    Eigen::VectorXd raw(static_cast<Eigen::Index>(values->size()));
    for (std::size_t k = 0; k < values->size(); ++k) {
        const auto &x = (*values)[k];
        if (!x.is_number()) {
            throw std::invalid_argument("vector input: non-numeric value");
        }
        raw(static_cast<Eigen::Index>(k)) = x.get<double>();
    }
    return correspondence::CoefficientVector::normalized(role, std::move(index),
                                                         raw);
}

} // namespace portdual::io
