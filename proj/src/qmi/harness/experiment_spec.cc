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

#include "qmi/harness/experiment_spec.h"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <toml.hpp>

namespace qmi {

namespace {

using nlohmann::json;

std::string lower_ext(const std::string &path) {
    auto dot = path.rfind('.');
    if (dot == std::string::npos) return "";
    std::string ext = path.substr(dot + 1);
    for (char &c : ext) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return ext;
}

json toml_to_json(const toml::node &node) {
    if (auto *t = node.as_table()) {
        json out = json::object();
        for (auto &&[k, v] : *t) out[std::string(k.str())] = toml_to_json(v);
        return out;
    }
    if (auto *a = node.as_array()) {
        json out = json::array();
        for (auto &&v : *a) out.push_back(toml_to_json(v));
        return out;
    }
    if (auto *v = node.as_string()) return v->get();
    if (auto *v = node.as_integer()) return v->get();
    if (auto *v = node.as_floating_point()) return v->get();
    if (auto *v = node.as_boolean()) return v->get();
    throw std::invalid_argument("unsupported TOML value (dates and times are not used)");
}

Engine parse_engine(std::string_view s) {
    if (s == "stabilizer" || s == "stab") return Engine::Stabilizer;
    if (s == "dense") return Engine::Dense;
    throw std::invalid_argument("unknown engine '" + std::string(s) + "'");
}

EnsembleChoice parse_ensemble_choice(std::string_view s) {
    if (s == "haar") return EnsembleChoice::Haar;
    if (s == "clifford") return EnsembleChoice::Clifford;
    if (s == "ising") return EnsembleChoice::Ising;
    if (s == "mfim") return EnsembleChoice::Mfim;
    if (s == "brickwork") return EnsembleChoice::Brickwork;
    throw std::invalid_argument("unknown ensemble '" + std::string(s) + "'");
}

template <typename T>
T get_or(const json &doc, const char *key, T fallback) {
    auto it = doc.find(key);
    if (it == doc.end() || it->is_null()) return fallback;
    return it->get<T>();
}

size_t get_count(const json &doc, const char *key, size_t fallback) {
    auto it = doc.find(key);
    if (it == doc.end() || it->is_null()) return fallback;
    if (!it->is_number_integer() || it->get<int64_t>() < 0) {
        throw std::invalid_argument(std::string("'") + key + "' must be a non-negative integer");
    }
    return it->get<size_t>();
}

}  // namespace

std::string_view to_string(Engine e) {
    return e == Engine::Stabilizer ? "stabilizer" : "dense";
}

std::string_view to_string(EnsembleChoice e) {
    switch (e) {
        case EnsembleChoice::Haar:
            return "haar";
        case EnsembleChoice::Clifford:
            return "clifford";
        case EnsembleChoice::Ising:
            return "ising";
        case EnsembleChoice::Mfim:
            return "mfim";
        case EnsembleChoice::Brickwork:
            return "brickwork";
    }
    return "?";
}

bool ExperimentSpec::needs_density_matrix() const {
    if (monitoring.kind != MonitoringKind::Monitored) return true;
    switch (initial.family) {
        case InitialFamily::CqState:
        case InitialFamily::CqProbe:
        case InitialFamily::LateTimeUnconditional:
            return true;
        default:
            return false;
    }
}

void ExperimentSpec::validate() const {
    shape.validate();
    if (engine == Engine::Stabilizer) {
        if (ensemble.kind != EnsembleChoice::Clifford) throw std::invalid_argument("stabilizer engine requires the clifford ensemble");
        if (initial.family != InitialFamily::BellPairs) throw std::invalid_argument("stabilizer engine requires the bell-pairs initial state");
    } else {
        if (ensemble.kind == EnsembleChoice::Clifford) throw std::invalid_argument("clifford ensemble runs on the stabilizer engine");
        size_t ceiling = needs_density_matrix() ? kMaxMixedQubits : kMaxPureQubits;
        if (shape.total() > ceiling) {
            throw std::invalid_argument(
                "dense engine refuses " + std::to_string(shape.total()) + " qubits (ceiling " + std::to_string(ceiling) +
                (needs_density_matrix() ? " for density matrices)" : " for state vectors)"));
        }
    }
    if (monitoring.kind == MonitoringKind::Partial) {
        if (monitoring.period < 1) throw std::invalid_argument("partial monitoring requires period s >= 1");
        if (monitoring.n_erased > shape.n_b) throw std::invalid_argument("partial monitoring requires N_E <= N_B");
    }
    if (reset == ResetKind::FullyMixed && monitoring.kind != MonitoringKind::Unmonitored) {
        throw std::invalid_argument("fully-mixed reset requires unmonitored mode");
    }
    if (initial.family == InitialFamily::CqProbe) {
        if (shape.n_r != 1) throw std::invalid_argument("cq-probe requires N_R = 1");
        if (!identical_unitary) throw std::invalid_argument("cq-probe requires identical_unitary (one channel)");
        if (reset == ResetKind::None) throw std::invalid_argument("cq-probe channels act on A alone; use a reset");
    }
    if (trajectories < 1) throw std::invalid_argument("at least one trajectory is required");
    if (!(epsilon > 0 && epsilon < 1)) throw std::invalid_argument("epsilon must lie in (0, 1)");
    if (!(ensemble.t_h > 0)) throw std::invalid_argument("t_h must be positive");
}

EnsembleSpec ExperimentSpec::dense_ensemble() const {
    EnsembleSpec out;
    switch (ensemble.kind) {
        case EnsembleChoice::Haar:
            out.kind = EnsembleKind::Haar;
            break;
        case EnsembleChoice::Ising:
            out.kind = EnsembleKind::Ising;
            break;
        case EnsembleChoice::Mfim:
            out.kind = EnsembleKind::Mfim;
            break;
        case EnsembleChoice::Brickwork:
            out.kind = EnsembleKind::Brickwork;
            break;
        case EnsembleChoice::Clifford:
            throw std::invalid_argument("clifford ensemble has no dense form");
    }
    out.identical = identical_unitary;
    out.t_h = ensemble.t_h;
    out.h_x = ensemble.h_x;
    out.h_y = ensemble.h_y;
    out.layers = ensemble.layers;
    return out;
}

ExperimentSpec spec_from_json(const json &doc) {
    if (!doc.is_object()) throw std::invalid_argument("experiment spec must be an object");
    ExperimentSpec s;
    s.name = get_or<std::string>(doc, "name", "");
    const json &shape = doc.at("shape");
    s.shape.n_a = get_count(shape, "n_a", 0);
    s.shape.n_r = get_count(shape, "n_r", s.shape.n_a);
    s.shape.n_b = get_count(shape, "n_b", 0);
    s.engine = parse_engine(get_or<std::string>(doc, "engine", "dense"));

    auto ens = doc.find("ensemble");
    if (ens != doc.end()) {
        if (ens->is_string()) {
            s.ensemble.kind = parse_ensemble_choice(ens->get<std::string>());
        } else {
            s.ensemble.kind = parse_ensemble_choice(ens->at("kind").get<std::string>());
            s.ensemble.t_h = get_or(*ens, "t_h", s.ensemble.t_h);
            s.ensemble.h_x = get_or(*ens, "h_x", s.ensemble.h_x);
            s.ensemble.h_y = get_or(*ens, "h_y", s.ensemble.h_y);
            s.ensemble.layers = get_count(*ens, "layers", s.ensemble.layers);
        }
    } else if (s.engine == Engine::Stabilizer) {
        s.ensemble.kind = EnsembleChoice::Clifford;
    }
    s.identical_unitary = get_or(doc, "identical_unitary", false);

    auto mon = doc.find("monitoring");
    if (mon != doc.end()) {
        if (mon->is_string()) {
            s.monitoring.kind = parse_monitoring(mon->get<std::string>());
        } else {
            s.monitoring.kind = parse_monitoring(mon->at("kind").get<std::string>());
            s.monitoring.period = get_count(*mon, "period", 0);
            s.monitoring.n_erased = get_count(*mon, "n_erased", 0);
        }
    }
    s.reset = parse_reset(get_or<std::string>(doc, "reset", "pure-zero"));

    auto init = doc.find("initial");
    if (init != doc.end()) {
        if (init->is_string()) {
            s.initial.family = parse_initial_family(init->get<std::string>());
        } else {
            s.initial.family = parse_initial_family(init->at("family").get<std::string>());
            s.initial.delta = get_or(*init, "delta", 0.0);
            s.initial.t0 = get_count(*init, "t0", 0);
            s.initial.mixing = get_or(*init, "mixing", -1.0);
        }
    }
    s.steps = get_count(doc, "steps", s.steps);
    s.trajectories = get_count(doc, "trajectories", s.trajectories);
    s.entropy = parse_entropy_kind(get_or<std::string>(doc, "entropy", "von-neumann"));
    s.seed = get_or<uint64_t>(doc, "seed", 0);
    s.epsilon = get_or(doc, "epsilon", 0.25);
    s.validate();
    return s;
}

json spec_to_json(const ExperimentSpec &s) {
    json out;
    out["name"] = s.name;
    out["shape"] = {{"n_r", s.shape.n_r}, {"n_a", s.shape.n_a}, {"n_b", s.shape.n_b}};
    out["engine"] = to_string(s.engine);
    out["ensemble"] = {
        {"kind", to_string(s.ensemble.kind)},
        {"t_h", s.ensemble.t_h},
        {"h_x", s.ensemble.h_x},
        {"h_y", s.ensemble.h_y},
        {"layers", s.ensemble.layers}};
    out["identical_unitary"] = s.identical_unitary;
    out["monitoring"] = {
        {"kind", to_string(s.monitoring.kind)}, {"period", s.monitoring.period}, {"n_erased", s.monitoring.n_erased}};
    out["reset"] = to_string(s.reset);
    out["initial"] = {
        {"family", to_string(s.initial.family)},
        {"delta", s.initial.delta},
        {"t0", s.initial.t0},
        {"mixing", s.initial.mixing}};
    out["steps"] = s.steps;
    out["trajectories"] = s.trajectories;
    out["entropy"] = to_string(s.entropy);
    out["seed"] = s.seed;
    out["epsilon"] = s.epsilon;
    return out;
}

std::string spec_hash(const ExperimentSpec &spec) {
    std::string text = spec_to_json(spec).dump();
    uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

json load_document(const std::string &path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    std::string ext = lower_ext(path);
    if (ext == "toml") {
        try {
            return toml_to_json(toml::parse(buf.str(), path));
        } catch (const toml::parse_error &e) {
            throw std::invalid_argument("TOML parse error in '" + path + "': " + std::string(e.description()));
        }
    }
    try {
        return json::parse(buf.str());
    } catch (const json::parse_error &e) {
        throw std::invalid_argument("JSON parse error in '" + path + "': " + e.what());
    }
}

}  // namespace qmi
