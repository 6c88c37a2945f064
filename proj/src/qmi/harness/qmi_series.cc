// Copyright 2026 The qmilab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qmi/harness/qmi_series.h"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace qmi {

namespace {

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

std::vector<std::string> split(const std::string &line) {
    std::vector<std::string> out;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) out.push_back(cell);
    return out;
}

}  // namespace

QmiSeries summarize(std::vector<std::vector<double>> samples, std::string entropy_kind) {
    if (samples.empty()) throw std::invalid_argument("no trajectories to summarize");
    size_t steps = samples.front().size();
    for (const auto &row : samples) {
        if (row.size() != steps) throw std::invalid_argument("trajectories have different lengths");
    }
    QmiSeries s;
    s.n_traj = samples.size();
    s.entropy_kind = std::move(entropy_kind);
    auto m = static_cast<double>(s.n_traj);
    for (size_t t = 0; t < steps; t++) {
        double sum = 0;
        for (const auto &row : samples) sum += row[t];
        double mean = sum / m;
        double ss = 0;
        for (const auto &row : samples) ss += (row[t] - mean) * (row[t] - mean);
        s.t.push_back(t);
        s.mean.push_back(mean);
        s.standard_error.push_back(s.n_traj > 1 ? std::sqrt(ss / (m - 1)) / std::sqrt(m) : 0.0);
    }
    s.samples = std::move(samples);
    return s;
}

void write_series_csv(const QmiSeries &series, const std::string &path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << "# format_version: " << kFormatVersion << "\n";
    out << "t,mean_qmi_bits,stderr,n_traj,entropy_kind\n";
    for (size_t i = 0; i < series.t.size(); i++) {
        out << series.t[i] << ',' << format_double(series.mean[i]) << ',' << format_double(series.standard_error[i]) << ','
            << series.n_traj << ',' << series.entropy_kind << '\n';
    }
}

QmiSeries read_series_csv(const std::string &path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    QmiSeries s;
    std::string line;
    bool header = false;
    int version = -1;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line[0] == '#') {
            auto pos = line.find("format_version:");
            if (pos != std::string::npos) version = std::stoi(line.substr(pos + 15));
            continue;
        }
        if (!header) {
            if (line.rfind("t,mean_qmi_bits", 0) != 0) throw std::invalid_argument("'" + path + "' is not a QMI series CSV");
            header = true;
            continue;
        }
        auto cells = split(line);
        if (cells.size() < 4) throw std::invalid_argument("malformed row in '" + path + "': " + line);
        s.t.push_back(std::stoul(cells[0]));
        s.mean.push_back(std::stod(cells[1]));
        s.standard_error.push_back(std::stod(cells[2]));
        s.n_traj = std::stoul(cells[3]);
        if (cells.size() > 4) s.entropy_kind = cells[4];
    }
    if (version > kFormatVersion) throw std::invalid_argument("'" + path + "' has a newer format_version");
    if (!header) throw std::invalid_argument("'" + path + "' has no header row");
    return s;
}

void write_json(const nlohmann::json &doc, const std::string &path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << doc.dump(2) << '\n';
}

void write_sidecar(const QmiSeries &series, const nlohmann::json &spec, const nlohmann::json &extra, const std::string &path) {
    nlohmann::json doc;
    doc["format_version"] = kFormatVersion;
    doc["code_version"] = series.code_version;
    doc["spec_hash"] = series.spec_hash;
    doc["spec"] = spec;
    doc["n_traj"] = series.n_traj;
    doc["entropy_kind"] = series.entropy_kind;
    if (!extra.is_null()) doc["extra"] = extra;
    write_json(doc, path);
}

}  // namespace qmi
