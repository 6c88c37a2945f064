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

#ifndef QMI_DENSE_INITIAL_STATE_H
#define QMI_DENSE_INITIAL_STATE_H

#include <string_view>

#include "qmi/common/shape.h"
#include "qmi/dense/dense_state.h"
#include "qmi/dense/unitaries.h"

namespace qmi {

enum class InitialFamily {
    BellPairs,
    PerturbedHaar,          // |phi_Haar> + delta |0...0> on R and A
    CqState,                // sum_j |j><j|_R (x) |u_j^delta><u_j^delta|_A
    CqProbe,                // reference bit correlated with a channel mode
    LateTimeConditional,    // Bell pairs after t0 monitored steps with all-zero outcomes
    LateTimeUnconditional,  // Bell pairs after t0 unmonitored pure-reset steps
};

std::string_view to_string(InitialFamily f);
InitialFamily parse_initial_family(std::string_view s);

struct InitialStateSpec {
    InitialFamily family = InitialFamily::BellPairs;
    double delta = 0;
    size_t t0 = 0;
    double mixing = -1;  // cq-probe weight a; negative selects the largest valid a
};

/// Fixed point and leading non-unit mode of a channel on A.
struct ProbeComponents {
    CMat fixed_point;
    CMat mode;
};

/// Largest a with fixed + a (mode + mode^dagger) positive semidefinite,
/// found by bisection to 1e-6.
double max_probe_mixing(const ProbeComponents &probe);

/// (1/2)[|0><0| (x) fixed + |1><1| (x) (fixed + a (mode + mode^dagger))].
CMat probe_density(const ProbeComponents &probe, double a);

/// Builds the R, A, B register with the bath in |0>. Late-time families draw
/// their preparation unitaries from `preparation`; cq-probe needs `probe`.
DenseState make_initial_state(
    const InitialStateSpec &spec,
    const SystemShape &shape,
    RngStream &rng,
    UnitarySequence *preparation = nullptr,
    const ProbeComponents *probe = nullptr);

}  // namespace qmi

#endif
