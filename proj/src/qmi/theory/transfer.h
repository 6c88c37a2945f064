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

#ifndef QMI_THEORY_TRANSFER_H
#define QMI_THEORY_TRANSFER_H

#include <array>
#include <cstddef>

#include "qmi/theory/purity.h"

// Two-by-two transfer matrices of the Haar-twirled replica dynamics. The
// two basis states are the swap and identity boundary conditions on the
// system, in that order. Purities are obtained by contracting a boundary row
// with a product of transfer matrices applied to a start column, all with
// the exact entries and a real replica index m.
namespace qmi::theory {

struct Mat2 {
    std::array<long double, 4> a{};  // row-major

    long double operator()(int r, int c) const {
        return a[static_cast<size_t>(2 * r + c)];
    }
    static Mat2 identity() {
        return {{1, 0, 0, 1}};
    }
    Mat2 operator*(const Mat2 &o) const;
    std::array<long double, 2> operator*(const std::array<long double, 2> &v) const;
};

Mat2 mat_pow(Mat2 m, size_t k);

// Measured bath with pure reset: symmetric, entries q_tau and q_e.
Mat2 q_matrix(long double m, int n_a, int n_b);
// Erasure step: N_E of the N_B bath qubits are discarded, the rest measured.
Mat2 q_prime_matrix(long double m, int n_a, int n_b, int n_e);
// First-order global matrix for t steps with an erasure every s steps.
Mat2 partial_global_matrix(long double m, int n_a, int n_b, int n_e, size_t s, size_t t);
// Measured bath without reset.
Mat2 no_reset_matrix(int n_a, int n_b);
// Unmeasured bath with pure reset.
Mat2 pure_reset_matrix(int n_a, int n_b);
// Unmeasured bath with maximally mixed reset; the first step still sees |0>.
Mat2 mixed_reset_matrix(int n_a, int n_b, bool first_step);

enum class TransferVariant {
    Q,           // conditioned dynamics
    QPrime,      // partial monitoring, exact erasure step and Q steps
    Lambda,      // partial monitoring, first-order global matrix
    M,           // measured bath without reset
    PureReset,   // unconditioned, pure reset
    MixedReset,  // unconditioned, maximally mixed reset
};

// Pseudo-purity at replica index m (m = -1 gives the physical purity).
// Variants without trajectory weighting do not depend on m.
long double transfer_purity(TransferVariant variant, long double m, const PurityShape &shape, size_t t, Subsystem region);

// The closed-form dynamics a variant reproduces at m = -1.
Dynamics dynamics_of(TransferVariant variant);

}  // namespace qmi::theory

#endif
