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

#ifndef QMI_SPECTRUM_CHANNEL_SPECTRUM_H
#define QMI_SPECTRUM_CHANNEL_SPECTRUM_H

#include <vector>

#include "qmi/common/protocol.h"
#include "qmi/dense/dense_state.h"
#include "qmi/dense/initial_state.h"

namespace qmi {

/// Single-step channel as a matrix acting on column-major vec(rho). Pure-zero
/// and fully-mixed resets act on A alone; dephasing (no reset) acts on A and B.
CMat build_superoperator(const CMat &u, size_t n_a, size_t n_b, ResetKind reset);

/// Applies a superoperator to a density matrix.
CMat apply_superoperator(const CMat &superop, const CMat &rho);

struct ChannelSpectrum {
    std::vector<cplx> eigenvalues;  // by modulus, descending
    cplx lambda0;
    cplx lambda1;
    CMat fixed_point;
    CMat leading_mode;  // eigenvector of lambda1, unit Frobenius norm
    double tau_eig = 0;  // -1/log2|lambda1|; infinity when |lambda1| = 1
    double bulk_radius = 0;  // median modulus of the non-unit eigenvalues
};

/// Outlier threshold on |lambda| for a bath of n_b qubits.
double outlier_radius(size_t n_b);

ChannelSpectrum spectrum_of(const CMat &superop);

/// Fraction of eigenvalues other than lambda0 with modulus above `radius`.
double fraction_outside(const ChannelSpectrum &spec, double radius);

ProbeComponents probe_components(const ChannelSpectrum &spec);

/// (1/2)[|0><0| (x) rho_fix + |1><1| (x) (rho_fix + a (sigma1 + sigma1^dagger))].
CMat probe_state(const ChannelSpectrum &spec, double a);

/// Least-squares fit of log(values) = log(amplitude) + rate * t over t = 0, 1, ...
struct DecayFit {
    double amplitude = 0;
    double rate = 0;
    double r_squared = 0;
};

DecayFit fit_exponential_decay(const std::vector<double> &values);

/// Modulus implied by a fitted rate for a decay |lambda|^{c t}. The positive
/// integer c is chosen nearest to rate / log|lambda_ref|.
struct ModulusFit {
    int exponent = 1;
    double modulus = 0;
};

ModulusFit fit_modulus(double rate, double reference_modulus);

}  // namespace qmi

#endif
