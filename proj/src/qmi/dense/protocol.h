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

#ifndef QMI_DENSE_PROTOCOL_H
#define QMI_DENSE_PROTOCOL_H

#include <vector>

#include "qmi/common/protocol.h"
#include "qmi/common/shape.h"
#include "qmi/dense/dense_state.h"

namespace qmi {

struct DenseStepRecord {
    std::vector<uint8_t> outcomes;  // measured bath bits, empty when unmonitored
    double probability = 1;         // Born weight of the sampled outcomes
};

/// One protocol step on a register laid out as R, A, B. The unitary acts on
/// A and B. Throws TrajectoryUnderflow when the sampled weight vanishes.
DenseStepRecord run_step(
    DenseState &state,
    const SystemShape &shape,
    const CMat &u,
    const Monitoring &monitoring,
    ResetKind reset,
    size_t step,
    RngStream &rng);

/// The same step with the bath outcomes fixed instead of sampled. Returns the
/// weight of the forced pattern (the state is left unnormalized if it is 0).
double run_step_forced(
    DenseState &state,
    const SystemShape &shape,
    const CMat &u,
    const Monitoring &monitoring,
    ResetKind reset,
    size_t step,
    uint64_t pattern);

}  // namespace qmi

#endif
