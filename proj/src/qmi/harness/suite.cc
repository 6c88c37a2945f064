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

#include "qmi/harness/suite.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>

#include "qmi/common/rng.h"
#include "qmi/harness/lifetime.h"
#include "qmi/harness/q2c.h"
#include "qmi/harness/runner.h"
#include "qmi/theory/closed_forms.h"

namespace qmi {

namespace {

using nlohmann::json;

std::string fmt(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    return buf;
}

theory::CurveParams curve_params(const json &p) {
    theory::CurveParams out;
    out.n_a = p.value("n_a", 0);
    out.n_r = p.value("n_r", -1);
    out.n_b = p.value("n_b", 0);
    out.n_e = p.value("n_e", 0);
    out.s = p.value("s", size_t{0});
    return out;
}

std::string safe_name(const std::string &name, size_t index) {
    std::string out = name.empty() ? "experiment_" + std::to_string(index) : name;
    for (char &c : out) {
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '-' && c != '_' && c != '.') c = '_';
    }
    return out;
}

}  // namespace

bool SuiteResult::passed() const {
    return failed_experiments == 0 &&
           std::all_of(rows.begin(), rows.end(), [](const CheckRow &r) { return r.passed; });
}

CheckRow check_against_theory(const QmiSeries &series, const json &check) {
    auto kind = theory::parse_curve_kind(check.at("curve").get<std::string>());
    auto params = curve_params(check.value("params", json::object()));
    size_t t_min = check.value("t_min", size_t{0});
    size_t t_max = std::min(check.value("t_max", series.t.empty() ? size_t{0} : series.t.back()), series.t.back());
    double abs_tol = check.value("abs_tol", 0.0);
    double k = check.value("stderr_mult", 0.0);
    double rel_tol = check.value("rel_tol", 0.0);
    CheckRow row;
    row.check = "theory:" + std::string(theory::to_string(kind));
    row.passed = true;
    double worst = 0;
    size_t worst_t = 0;
    for (size_t i = 0; i < series.t.size(); i++) {
        size_t t = series.t[i];
        if (t < t_min || t > t_max) continue;
        double expected = theory::evaluate(kind, params, t).bits;
        double tol = std::max({abs_tol, k * series.standard_error[i], rel_tol * std::abs(expected)});
        double dev = std::abs(series.mean[i] - expected);
        if (dev - tol > worst || (row.passed && dev > tol)) {
            worst = dev - tol;
            worst_t = t;
        }
        if (dev > tol) row.passed = false;
    }
    row.detail = row.passed ? "within tolerance for t in [" + std::to_string(t_min) + ", " + std::to_string(t_max) + "]"
                            : "exceeds tolerance by " + fmt(worst) + " bits at t=" + std::to_string(worst_t);
    return row;
}

CheckRow check_lifetime(const QmiSeries &series, const json &check, double default_epsilon) {
    double eps = check.value("epsilon", default_epsilon);
    double rel_tol = check.value("rel_tol", 0.1);
    Lifetime got = estimate_lifetime(series.mean, eps);
    double expected;
    if (check.contains("expected")) {
        expected = check.at("expected").get<double>();
    } else {
        auto kind = theory::parse_curve_kind(check.at("curve").get<std::string>());
        auto curve = theory::make_curve(kind, curve_params(check.value("params", json::object())), series.t.back());
        std::vector<double> values;
        for (const auto &p : curve.points) values.push_back(p.bits);
        Lifetime th = estimate_lifetime(values, eps);
        if (th.censored) throw std::invalid_argument("theory lifetime exceeds the horizon");
        expected = th.steps;
    }
    CheckRow row;
    row.check = "lifetime(eps=" + fmt(eps) + ")";
    row.passed = !got.censored && std::abs(got.steps - expected) <= rel_tol * std::abs(expected);
    row.detail = "measured " + got.describe() + ", expected " + fmt(expected) + " +/- " + fmt(100 * rel_tol) + "%";
    return row;
}

SuiteResult run_suite(const json &config, const std::string &out_dir, std::optional<uint64_t> seed_override) {
    namespace fs = std::filesystem;
    fs::create_directories(out_dir);
    std::optional<uint64_t> suite_seed = seed_override;
    if (!suite_seed && config.contains("seed")) suite_seed = config.at("seed").get<uint64_t>();
    json experiments = config.value("experiments", json::array());
    if (!experiments.is_array()) throw std::invalid_argument("'experiments' must be a list");

    SuiteResult result;
    json manifest;
    manifest["format_version"] = kFormatVersion;
    manifest["code_version"] = kCodeVersion;
    manifest["suite_seed"] = suite_seed ? json(*suite_seed) : json(nullptr);
    manifest["experiments"] = json::array();

    for (size_t i = 0; i < experiments.size(); i++) {
        const json &entry = experiments[i];
        std::string name = safe_name(entry.value("name", std::string()), i);
        json record;
        record["name"] = name;
        auto started = std::chrono::steady_clock::now();
        try {
            json spec_doc = entry.at("spec");
            if (!spec_doc.contains("name")) spec_doc["name"] = name;
            if (suite_seed) spec_doc["seed"] = derive_seed(*suite_seed, {i});
            ExperimentSpec spec = spec_from_json(spec_doc);
            std::string task = entry.value("task", std::string("simulate"));
            QmiSeries series;
            json extra;
            if (task == "simulate") {
                series = run(spec);
            } else if (task == "q2c") {
                json q = entry.value("q2c", json::object());
                std::string mode = q.value("mode", std::string("conditioned"));
                Q2cMode m = mode == "unconditioned" ? Q2cMode::Unconditioned : Q2cMode::Conditioned;
                if (mode != "conditioned" && mode != "unconditioned") throw std::invalid_argument("unknown q2c mode '" + mode + "'");
                Q2cResult r = q2c_mutual_info(spec, m, {q.value("shots", size_t{0})});
                series = std::move(r.series);
                extra = {{"q2c_mode", mode}, {"variance_warning", r.variance_warning}, {"exact_enumeration", r.exact_enumeration}};
            } else {
                throw std::invalid_argument("unknown task '" + task + "'");
            }
            Lifetime life = series.mean.size() >= 2 && series.mean[0] > 0 ? estimate_lifetime(series.mean, spec.epsilon) : Lifetime{};
            if (extra.is_null()) extra = json::object();
            extra["lifetime"] = series.mean.size() >= 2 && series.mean[0] > 0 ? json(life.describe()) : json(nullptr);
            write_series_csv(series, (fs::path(out_dir) / (name + ".csv")).string());
            write_sidecar(series, spec_to_json(spec), extra, (fs::path(out_dir) / (name + ".json")).string());
            record["seed"] = spec.seed;
            record["spec_hash"] = series.spec_hash;
            record["csv"] = name + ".csv";
            record["status"] = "ok";
            for (const json &check : entry.value("checks", json::array())) {
                std::string kind = check.at("kind").get<std::string>();
                CheckRow row;
                if (kind == "theory") {
                    row = check_against_theory(series, check);
                } else if (kind == "lifetime") {
                    row = check_lifetime(series, check, spec.epsilon);
                } else {
                    throw std::invalid_argument("unknown check kind '" + kind + "'");
                }
                row.experiment = name;
                result.rows.push_back(row);
            }
        } catch (const std::exception &e) {
            result.failed_experiments++;
            record["status"] = "error";
            record["error"] = e.what();
            result.rows.push_back({name, "run", false, e.what()});
        }
        record["wall_seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
        manifest["experiments"].push_back(record);
    }
    write_json(manifest, (fs::path(out_dir) / "manifest.json").string());

    json report;
    report["format_version"] = kFormatVersion;
    report["passed"] = result.passed();
    report["rows"] = json::array();
    std::ofstream txt(fs::path(out_dir) / "report.txt", std::ios::binary);
    for (const CheckRow &r : result.rows) {
        report["rows"].push_back({{"experiment", r.experiment}, {"check", r.check}, {"passed", r.passed}, {"detail", r.detail}});
        txt << (r.passed ? "PASS " : "FAIL ") << r.experiment << " " << r.check << ": " << r.detail << "\n";
    }
    write_json(report, (fs::path(out_dir) / "report.json").string());
    return result;
}

}  // namespace qmi
