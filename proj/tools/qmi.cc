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


// Command-line front end: simulate, theory, spectrum, q2c, suite, lifetime.
// Exit codes: 0 ok, 1 a suite check failed, 2 error.

#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include "qmi/common/rng.h"
#include "qmi/harness/experiment_spec.h"
#include "qmi/harness/lifetime.h"
#include "qmi/harness/q2c.h"
#include "qmi/harness/qmi_series.h"
#include "qmi/harness/runner.h"
#include "qmi/harness/spectrum_report.h"
#include "qmi/harness/suite.h"
#include "qmi/spectrum/channel_spectrum.h"
#include "qmi/theory/closed_forms.h"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace qmi;

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kError = 2;

// Largest system whose superoperator the spectrum command will diagonalize.
constexpr size_t kMaxChannelQubits = 6;

struct Common {
    std::string out = "out";
    std::optional<uint64_t> seed;
    size_t workers = 0;
};

fs::path out_dir(const Common &c) {
    fs::create_directories(c.out);
    return c.out;
}

ExperimentSpec load_spec_from(const json &doc, const Common &c) {
    ExperimentSpec spec = spec_from_json(doc);
    if (c.seed) spec.seed = *c.seed;
    return spec;
}

ExperimentSpec load_spec(const std::string &path, const Common &c) {
    ExperimentSpec spec = load_spec_from(load_document(path), c);
    if (spec.name.empty()) spec.name = fs::path(path).stem().string();
    return spec;
}

json lifetime_json(const Lifetime &life, double epsilon) {
    return {{"epsilon", epsilon}, {"steps", life.censored ? json(nullptr) : json(life.steps)}, {"censored", life.censored},
            {"horizon", life.horizon}, {"text", life.describe()}};
}

void save_series(const fs::path &dir, const std::string &name, const QmiSeries &series, const ExperimentSpec &spec, const json &extra) {
    write_series_csv(series, (dir / (name + ".csv")).string());
    write_sidecar(series, spec_to_json(spec), extra, (dir / (name + ".json")).string());
    std::cout << (dir / (name + ".csv")).string() << "\n";
}

int simulate(const std::string &path, const Common &c) {
    ExperimentSpec spec = load_spec(path, c);
    QmiSeries series = run(spec, {c.workers});
    json extra = {{"lifetime", lifetime_json(estimate_lifetime(series.mean, spec.epsilon), spec.epsilon)}};
    save_series(out_dir(c), spec.name, series, spec, extra);
    return kOk;
}

struct TheoryArgs {
    std::string curve;
    theory::CurveParams params;
    size_t t_max = 64;
    std::optional<double> epsilon;
};

int theory_curve(const TheoryArgs &a, const Common &c) {
    theory::CurveKind kind = theory::parse_curve_kind(a.curve);
    theory::TheoryCurve curve = theory::make_curve(kind, a.params, a.t_max);
    fs::path dir = out_dir(c);
    std::string name(theory::to_string(kind));
    std::FILE *f = std::fopen((dir / (name + ".csv")).string().c_str(), "w");
    if (!f) throw std::runtime_error("cannot write " + (dir / (name + ".csv")).string());
    std::fprintf(f, "# format_version: %d\nt,qmi_bits,flag\n", kFormatVersion);
    std::vector<double> bits;
    for (const auto &p : curve.points) {
        std::fprintf(f, "%zu,%.12g,%s\n", p.t, p.bits, std::string(theory::to_string(p.flag)).c_str());
        bits.push_back(p.bits);
    }
    std::fclose(f);
    const auto &p = a.params;
    json doc = {{"format_version", kFormatVersion},
                {"code_version", kCodeVersion},
                {"curve", name},
                {"params", {{"n_r", p.n_r}, {"n_a", p.n_a}, {"n_b", p.n_b}, {"n_e", p.n_e}, {"s", p.s}}},
                {"t_max", a.t_max}};
    if (a.epsilon) doc["lifetime"] = lifetime_json(estimate_lifetime(bits, *a.epsilon), *a.epsilon);
    write_json(doc, (dir / (name + ".json")).string());
    std::cout << (dir / (name + ".csv")).string() << "\n";
    return kOk;
}

// A channel spec carries n_a, n_b, ensemble, reset, draws and seed.
int spectrum(const std::string &path, const Common &c) {
    json doc = load_document(path);
    size_t n_a = doc.at("n_a").get<size_t>();
    size_t n_b = doc.at("n_b").get<size_t>();
    if (n_a > kMaxChannelQubits) {
        throw std::invalid_argument("spectrum refuses N_A = " + std::to_string(n_a) + " (ceiling " + std::to_string(kMaxChannelQubits) + ")");
    }
    size_t draws = doc.value("draws", size_t{1});
    if (draws == 0) throw std::invalid_argument("draws must be at least 1");
    // Reuse the experiment parser for the ensemble and reset fields.
    json exp = {{"name", doc.value("name", fs::path(path).stem().string())},
                {"shape", {{"n_r", 0}, {"n_a", n_a}, {"n_b", n_b}}},
                {"engine", "dense"},
                {"monitoring", "unmonitored"},
                {"ensemble", doc.value("ensemble", json("haar"))},
                {"reset", doc.value("reset", std::string("pure-zero"))},
                {"identical_unitary", true},
                {"seed", doc.value("seed", uint64_t{0})}};
    ExperimentSpec spec = load_spec_from(exp, c);
    double radius = spec.reset == ResetKind::FullyMixed ? 1.3 / std::ldexp(1.0, static_cast<int>(n_b)) : outlier_radius(n_b);
    fs::path dir = out_dir(c);
    json rows = json::array();
    double log_tau = 0;
    bool finite = true;
    for (size_t k = 0; k < draws; k++) {
        UnitarySequence seq(spec.dense_ensemble(), n_a + n_b, RngStream(spec.seed, {k}));
        ChannelSpectrum s = spectrum_of(build_superoperator(seq.next(), n_a, n_b, spec.reset));
        std::string name = spec.name + "_draw" + std::to_string(k);
        write_spectrum_csv(s, (dir / (name + ".csv")).string());
        json summary = spectrum_summary(s, radius);
        summary["draw"] = k;
        summary["csv"] = name + ".csv";
        rows.push_back(summary);
        finite = finite && std::isfinite(s.tau_eig) && s.tau_eig > 0;
        if (finite) log_tau += std::log(s.tau_eig) / static_cast<double>(draws);
    }
    json out = {{"format_version", kFormatVersion},
                {"code_version", kCodeVersion},
                {"channel", {{"n_a", n_a}, {"n_b", n_b}, {"ensemble", spec_to_json(spec)["ensemble"]}, {"reset", to_string(spec.reset)}, {"seed", spec.seed}}},
                {"outlier_radius", radius},
                {"tau_eig_geometric_mean", finite ? json(std::exp(log_tau)) : json(nullptr)},
                {"draws", rows}};
    write_json(out, (dir / (spec.name + "_summary.json")).string());
    std::cout << (dir / (spec.name + "_summary.json")).string() << "\n";
    return kOk;
}

int q2c(const std::string &path, const std::string &mode, size_t shots, const Common &c) {
    ExperimentSpec spec = load_spec(path, c);
    fs::path dir = out_dir(c);
    for (Q2cMode m : {Q2cMode::Conditioned, Q2cMode::Unconditioned}) {
        std::string label = m == Q2cMode::Conditioned ? "conditioned" : "unconditioned";
        if (mode != "both" && mode != label) continue;
        Q2cResult r = q2c_mutual_info(spec, m, {shots});
        if (r.variance_warning) std::cerr << "warning: " << shots << " shots is below twice the readout support\n";
        json extra = {{"q2c_mode", label}, {"shots", shots}, {"exact_enumeration", r.exact_enumeration}, {"variance_warning", r.variance_warning}};
        save_series(dir, spec.name + "_q2c_" + label, r.series, spec, extra);
    }
    return kOk;
}

int suite(const std::string &path, const Common &c) {
    SuiteResult r = run_suite(load_document(path), out_dir(c).string(), c.seed);
    for (const auto &row : r.rows) {
        std::cout << (row.passed ? "PASS " : "FAIL ") << row.experiment << " " << row.check << ": " << row.detail << "\n";
    }
    return r.passed() ? kOk : kCheckFailed;
}

int lifetime(const std::string &path, double epsilon, const Common &c) {
    QmiSeries series = read_series_csv(path);
    Lifetime life = estimate_lifetime(series.mean, epsilon);
    json doc = {{"format_version", kFormatVersion}, {"source", path}, {"lifetime", lifetime_json(life, epsilon)}};
    fs::path file = out_dir(c) / (fs::path(path).stem().string() + "_lifetime.json");
    write_json(doc, file.string());
    std::cout << life.describe() << "\n";
    return kOk;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Quantum mutual information lifetimes: simulation, theory and channel spectra"};
    app.require_subcommand(1);
    Common common;
    auto add_common = [&](CLI::App *sub) {
        sub->add_option("--out", common.out, "output directory")->capture_default_str();
        sub->add_option("--seed", common.seed, "master seed, overrides the input file");
        sub->add_option("--workers", common.workers, "worker threads (0 = all cores)");
    };

    std::string input;
    auto *sim = app.add_subcommand("simulate", "run an experiment spec (TOML or JSON)");
    sim->add_option("spec", input, "experiment spec")->required();
    add_common(sim);

    TheoryArgs ta;
    auto *thy = app.add_subcommand("theory", "evaluate a closed-form curve");
    thy->add_option("curve", ta.curve, "curve kind, e.g. thm1-lb or thm3-exact")->required();
    thy->add_option("--n-a", ta.params.n_a, "system qubits")->required();
    thy->add_option("--n-b", ta.params.n_b, "bath qubits")->required();
    thy->add_option("--n-r", ta.params.n_r, "reference qubits (default N_A)");
    thy->add_option("--n-e", ta.params.n_e, "erased bath qubits");
    thy->add_option("--s", ta.params.s, "erasure period (0 = never)");
    thy->add_option("--t-max", ta.t_max, "last step")->capture_default_str();
    thy->add_option("--epsilon", ta.epsilon, "also report the curve's lifetime");
    add_common(thy);

    auto *spec = app.add_subcommand("spectrum", "diagonalize channel superoperators");
    spec->add_option("channel", input, "channel spec (n_a, n_b, ensemble, reset, draws, seed)")->required();
    add_common(spec);

    std::string mode = "both";
    size_t shots = 0;
    auto *qc = app.add_subcommand("q2c", "quantum-to-classical mutual information");
    qc->add_option("spec", input, "experiment spec")->required();
    qc->add_option("--mode", mode, "conditioned, unconditioned or both")
        ->check(CLI::IsMember({"conditioned", "unconditioned", "both"}))
        ->capture_default_str();
    qc->add_option("--shots", shots, "readout shots per step (0 = exact distribution)")->capture_default_str();
    add_common(qc);

    auto *st = app.add_subcommand("suite", "run a suite config and check it against theory");
    st->add_option("config", input, "suite config")->required();
    add_common(st);

    double epsilon = 0.25;
    auto *lt = app.add_subcommand("lifetime", "lifetime of a series CSV");
    lt->add_option("csv", input, "series CSV")->required();
    lt->add_option("--epsilon", epsilon, "threshold fraction of the initial value")->capture_default_str();
    add_common(lt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        return app.exit(e) == 0 ? kOk : kError;
    }
    try {
        if (*sim) return simulate(input, common);
        if (*thy) return theory_curve(ta, common);
        if (*spec) return spectrum(input, common);
        if (*qc) return q2c(input, mode, shots, common);
        if (*st) return suite(input, common);
        if (*lt) return lifetime(input, epsilon, common);
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kError;
    }
    return kError;
}
