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

#include "qmi/harness/runner.h"

#include <optional>

#include "qmi/common/parallel.h"
#include "qmi/dense/protocol.h"
#include "qmi/spectrum/channel_spectrum.h"
#include "qmi/stab/clifford_op.h"
#include "qmi/stab/protocol.h"

namespace qmi {

namespace {

std::vector<double> stabilizer_trajectory(const ExperimentSpec &spec, size_t m) {
    RngStream urng(spec.seed, {m, 0});
    RngStream mrng(spec.seed, {m, 1});
    const SystemShape &shape = spec.shape;
    std::vector<size_t> r = shape.r_qubits(), a = shape.a_qubits();
    StabilizerState state = bell_pairs_init(shape);
    std::optional<CliffordOp> fixed;
    if (spec.identical_unitary) fixed = random_clifford(shape.n_a + shape.n_b, urng);
    std::vector<double> out{static_cast<double>(mutual_info(state, r, a))};
    for (size_t t = 1; t <= spec.steps; t++) {
        CliffordOp op = fixed ? *fixed : random_clifford(shape.n_a + shape.n_b, urng);
        run_step(state, shape, op, spec.monitoring, spec.reset, t, mrng);
        out.push_back(static_cast<double>(mutual_info(state, r, a)));
    }
    return out;
}

std::vector<double> dense_trajectory(const ExperimentSpec &spec, size_t m) {
    RngStream urng(spec.seed, {m, 0});
    RngStream mrng(spec.seed, {m, 1});
    RngStream irng(spec.seed, {m, 2});
    const SystemShape &shape = spec.shape;
    UnitarySequence unitaries(spec.dense_ensemble(), shape.n_a + shape.n_b, urng);
    DenseState state = dense_initial_state(spec, unitaries, irng);
    if (spec.needs_density_matrix()) state.make_mixed();
    std::vector<size_t> r = shape.r_qubits(), a = shape.a_qubits();
    std::vector<double> out{qmi(state, r, a, spec.entropy)};
    for (size_t t = 1; t <= spec.steps; t++) {
        run_step(state, shape, unitaries.next(), spec.monitoring, spec.reset, t, mrng);
        out.push_back(qmi(state, r, a, spec.entropy));
    }
    return out;
}

}  // namespace

DenseState dense_initial_state(const ExperimentSpec &spec, UnitarySequence &unitaries, RngStream &init_rng) {
    if (spec.initial.family != InitialFamily::CqProbe) {
        return make_initial_state(spec.initial, spec.shape, init_rng, &unitaries);
    }
    // The identical unitary defines the channel whose leading mode is probed.
    const CMat &u = unitaries.next();
    ChannelSpectrum spectrum = spectrum_of(build_superoperator(u, spec.shape.n_a, spec.shape.n_b, spec.reset));
    ProbeComponents probe = probe_components(spectrum);
    return make_initial_state(spec.initial, spec.shape, init_rng, &unitaries, &probe);
}

QmiSeries run(const ExperimentSpec &spec, const RunOptions &options) {
    spec.validate();
    std::vector<std::vector<double>> samples(spec.trajectories);
    bool stab = spec.engine == Engine::Stabilizer;
    parallel_for(
        spec.trajectories,
        [&](size_t m) { samples[m] = stab ? stabilizer_trajectory(spec, m) : dense_trajectory(spec, m); },
        options.workers);
    // Stabilizer entropies are flat, so every Renyi order agrees.
    QmiSeries series = summarize(std::move(samples), std::string(to_string(spec.entropy)));
    series.spec_hash = spec_hash(spec);
    return series;
}

}  // namespace qmi
