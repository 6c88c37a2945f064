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

#ifndef QMI_HARNESS_RUNNER_H
#define QMI_HARNESS_RUNNER_H

#include "qmi/dense/dense_state.h"
#include "qmi/harness/experiment_spec.h"
#include "qmi/harness/qmi_series.h"

namespace qmi {

struct RunOptions {
    size_t workers = 0;  // 0 = hardware concurrency
};

/// Runs every trajectory of the experiment and returns the per-step QMI.
/// Trajectory m draws from RngStream(seed, {m, stream}) with stream 0 for
/// unitaries, 1 for measurement outcomes and 2 for the initial state.
QmiSeries run(const ExperimentSpec &spec, const RunOptions &options = {});

/// Initial dense state of trajectory m, consuming `unitaries` for late-time
/// preparation and cq-probe channel analysis.
DenseState dense_initial_state(const ExperimentSpec &spec, UnitarySequence &unitaries, RngStream &init_rng);

}  // namespace qmi

#endif
