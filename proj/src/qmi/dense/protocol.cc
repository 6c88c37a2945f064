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

#include "qmi/dense/protocol.h"

#include <stdexcept>

namespace qmi {

namespace {

struct BathSplit {
    std::vector<size_t> erased;
    std::vector<size_t> measured;
};

// Applies the unitary and every non-measurement part of the step. Returns the
// bath qubits that are measured next (empty when unmonitored).
BathSplit prepare(
    DenseState &state, const SystemShape &shape, const CMat &u, const Monitoring &monitoring, ResetKind reset, size_t step) {
    if (state.n() != shape.total()) throw std::invalid_argument("state size does not match the shape");
    auto dim = Eigen::Index{1} << (shape.n_a + shape.n_b);
    if (u.rows() != dim || u.cols() != dim) throw std::invalid_argument("step unitary must act on A and B");
    state.apply_trailing(u);
    std::vector<size_t> bath = shape.b_qubits();
    if (monitoring.kind == MonitoringKind::Unmonitored) {
        switch (reset) {
            case ResetKind::PureZero:
                state.reset_to_zero(bath);
                break;
            case ResetKind::None:
                state.dephase(bath);
                break;
            case ResetKind::FullyMixed:
                state.replace_mixed(bath);
                break;
        }
        return {};
    }
    if (reset == ResetKind::FullyMixed) {
        throw std::invalid_argument("fully-mixed reset is only defined for unmonitored dynamics");
    }
    BathSplit split;
    if (monitoring.erases_at(step)) {
        if (monitoring.n_erased > bath.size()) throw std::invalid_argument("cannot erase more qubits than the bath holds");
        auto cut = bath.begin() + static_cast<std::ptrdiff_t>(monitoring.n_erased);
        split.erased.assign(bath.begin(), cut);
        split.measured.assign(cut, bath.end());
        if (reset == ResetKind::PureZero) {
            state.reset_to_zero(split.erased);
        } else {
            state.replace_mixed(split.erased);
        }
    } else {
        split.measured = std::move(bath);
    }
    return split;
}

std::vector<uint8_t> bits_of(uint64_t pattern, size_t k) {
    std::vector<uint8_t> out(k);
    for (size_t j = 0; j < k; j++) out[j] = static_cast<uint8_t>((pattern >> (k - 1 - j)) & 1);
    return out;
}

}  // namespace

DenseStepRecord run_step(
    DenseState &state,
    const SystemShape &shape,
    const CMat &u,
    const Monitoring &monitoring,
    ResetKind reset,
    size_t step,
    RngStream &rng) {
    BathSplit split = prepare(state, shape, u, monitoring, reset, step);
    DenseStepRecord rec;
    if (split.measured.empty()) return rec;
    uint64_t pattern = state.measure(split.measured, rng, rec.probability);
    if (reset == ResetKind::PureZero) state.flip(split.measured, pattern);
    rec.outcomes = bits_of(pattern, split.measured.size());
    return rec;
}

double run_step_forced(
    DenseState &state,
    const SystemShape &shape,
    const CMat &u,
    const Monitoring &monitoring,
    ResetKind reset,
    size_t step,
    uint64_t pattern) {
    BathSplit split = prepare(state, shape, u, monitoring, reset, step);
    if (split.measured.empty()) return 1;
    double p = state.project(split.measured, pattern);
    if (reset == ResetKind::PureZero) state.flip(split.measured, pattern);
    return p;
}

}  // namespace qmi
