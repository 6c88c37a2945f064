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

#ifndef QMI_THEORY_PURITY_H
#define QMI_THEORY_PURITY_H

#include <cstddef>

namespace qmi::theory {

enum class Subsystem { R, A, RA };

enum class Dynamics {
    Conditioned,  // measured bath, pure reset, trajectory-averaged purity
    PureReset,    // unmeasured bath, pure reset
    NoReset,      // measured bath, no reset, trajectories discarded
    MixedReset,   // unmeasured bath, reset to the maximally mixed state
    Partial,      // measured bath with periodic erasure (first order in 1/d_A)
};

struct PurityShape {
    int n_r = -1;  // negative: same as n_a
    int n_a = 0;
    int n_b = 0;
    int n_e = 0;
    size_t s = 0;  // erasure period, 0 = never

    int ref() const {
        return n_r < 0 ? n_a : n_r;
    }
};

long double pow2(long double exponent);

// Haar-averaged purity (or trajectory-averaged purity for the measured
// dynamics) at replica index m = -1, written in closed form. NoReset and
// MixedReset hold for t >= 1.
long double closed_form_purity(Dynamics dynamics, const PurityShape &shape, size_t t, Subsystem region);

}  // namespace qmi::theory

#endif
