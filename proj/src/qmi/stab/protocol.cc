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

#include "qmi/stab/protocol.h"

namespace qmi {

namespace {

std::vector<uint8_t> measure_and_reset(
    StabilizerState &state, const std::vector<size_t> &qubits, ResetKind reset, RngStream &rng) {
    std::vector<uint8_t> outcomes;
    outcomes.reserve(qubits.size());
    for (size_t q : qubits) {
        outcomes.push_back(state.measure_z(q, rng));
    }
    if (reset == ResetKind::PureZero) {
        state.reset_or_discard(qubits, StabResetMode::ToZero, outcomes);
    }
    return outcomes;
}

}  // namespace

std::vector<uint8_t> run_step(
    StabilizerState &state,
    const SystemShape &shape,
    const CliffordOp &op,
    const Monitoring &monitoring,
    ResetKind reset,
    size_t step,
    RngStream &rng) {
    if (op.n != shape.n_a + shape.n_b) {
        throw std::invalid_argument("step op must act on A and B");
    }
    std::vector<size_t> ab = shape.ab_qubits();
    state.apply(op, ab);
    std::vector<size_t> bath = shape.b_qubits();

    if (monitoring.kind == MonitoringKind::Unmonitored) {
        switch (reset) {
            case ResetKind::PureZero:
                state.trace_out(bath);
                state.append_zero(bath);
                break;
            case ResetKind::None:
                for (size_t q : bath) {
                    state.dephase_z(q);
                }
                break;
            case ResetKind::FullyMixed:
                state.trace_out(bath);
                break;
        }
        return {};
    }
    if (reset == ResetKind::FullyMixed) {
        throw std::invalid_argument("fully-mixed reset is only defined for unmonitored dynamics");
    }
    if (monitoring.erases_at(step)) {
        if (monitoring.n_erased > bath.size()) {
            throw std::invalid_argument("cannot erase more qubits than the bath holds");
        }
        std::vector<size_t> erased(bath.begin(), bath.begin() + static_cast<std::ptrdiff_t>(monitoring.n_erased));
        std::vector<size_t> kept(bath.begin() + static_cast<std::ptrdiff_t>(monitoring.n_erased), bath.end());
        state.trace_out(erased);
        if (reset == ResetKind::PureZero) {
            state.append_zero(erased);
        }
        return measure_and_reset(state, kept, reset, rng);
    }
    return measure_and_reset(state, bath, reset, rng);
}

}  // namespace qmi
