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

#ifndef QMI_HARNESS_EXPERIMENT_SPEC_H
#define QMI_HARNESS_EXPERIMENT_SPEC_H

#include <cstdint>
#include <string>
#include <string_view>

#include <json.hpp>

#include "qmi/common/entropy_kind.h"
#include "qmi/common/protocol.h"
#include "qmi/common/shape.h"
#include "qmi/dense/initial_state.h"
#include "qmi/dense/unitaries.h"

namespace qmi {

inline constexpr int kFormatVersion = 1;
inline constexpr std::string_view kCodeVersion = "1.0.0";

enum class Engine { Stabilizer, Dense };
enum class EnsembleChoice { Haar, Clifford, Ising, Mfim, Brickwork };

std::string_view to_string(Engine e);
std::string_view to_string(EnsembleChoice e);

struct EnsembleParams {
    EnsembleChoice kind = EnsembleChoice::Haar;
    double t_h = 50;
    double h_x = 0.8090;
    double h_y = 0.9045;
    size_t layers = 4;
};

struct ExperimentSpec {
    std::string name;
    SystemShape shape;
    Engine engine = Engine::Dense;
    EnsembleParams ensemble;
    bool identical_unitary = false;
    Monitoring monitoring;
    ResetKind reset = ResetKind::PureZero;
    InitialStateSpec initial;
    size_t steps = 10;
    size_t trajectories = 1;
    EntropyKind entropy = EntropyKind::VonNeumann;
    uint64_t seed = 0;
    double epsilon = 0.25;

    /// Throws std::invalid_argument naming the violated constraint.
    void validate() const;

    /// True when the dense engine must hold a density matrix.
    bool needs_density_matrix() const;

    /// Dense-engine ensemble settings; only valid for non-Clifford ensembles.
    EnsembleSpec dense_ensemble() const;
};

/// Parses a spec from JSON. `n_r` defaults to `n_a`; string shorthands are
/// accepted for `monitoring`, `initial` and `ensemble`.
ExperimentSpec spec_from_json(const nlohmann::json &doc);
nlohmann::json spec_to_json(const ExperimentSpec &spec);

/// FNV-1a hash of the canonical JSON form, as 16 hex digits.
std::string spec_hash(const ExperimentSpec &spec);

/// Reads a JSON or TOML file (by extension) into a JSON document.
nlohmann::json load_document(const std::string &path);

}  // namespace qmi

#endif
