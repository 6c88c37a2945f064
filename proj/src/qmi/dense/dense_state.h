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

#ifndef QMI_DENSE_DENSE_STATE_H
#define QMI_DENSE_DENSE_STATE_H

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "qmi/common/entropy_kind.h"
#include "qmi/common/rng.h"

namespace qmi {

using cplx = std::complex<double>;
using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;

/// Largest registers the dense engine accepts.
inline constexpr size_t kMaxPureQubits = 14;
inline constexpr size_t kMaxMixedQubits = 11;

/// Raised when a sampled trajectory's weight falls below 1e-300.
class TrajectoryUnderflow : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Count of eigenvalues below -1e-8 met while computing entropies.
uint64_t numerical_health_warnings();

/// Pure or mixed state of n qubits. Qubit 0 is the most significant bit of
/// a basis index.
class DenseState {
   public:
    static DenseState zero(size_t n, bool mixed);
    static DenseState from_vector(CVec psi);
    static DenseState from_matrix(CMat rho);

    size_t n() const {
        return n_;
    }
    size_t dim() const {
        return size_t{1} << n_;
    }
    bool is_pure() const {
        return pure_;
    }
    const CVec &vector() const {
        return psi_;
    }
    const CMat &matrix() const {
        return rho_;
    }

    /// Density matrix of the whole register.
    CMat density() const;
    /// Switches a pure state to its density-matrix form.
    void make_mixed();

    /// Applies u to the last log2(u.rows()) qubits.
    void apply_trailing(const CMat &u);
    /// Applies u to the listed qubits, first listed qubit most significant.
    void apply(const CMat &u, std::span<const size_t> qubits);

    /// Outcome pattern probabilities over the listed qubits (first listed is
    /// the most significant bit of the pattern).
    std::vector<double> outcome_probabilities(std::span<const size_t> qubits) const;
    /// Projects onto the pattern and renormalizes. Returns its probability.
    double project(std::span<const size_t> qubits, uint64_t pattern);
    /// Born-rule samples a pattern, projects onto it, and returns it.
    uint64_t measure(std::span<const size_t> qubits, RngStream &rng, double &probability);
    /// Flips the listed qubits where the pattern has a 1 bit.
    void flip(std::span<const size_t> qubits, uint64_t pattern);

    /// Channel: discard the qubits and prepare them in |0>.
    void reset_to_zero(std::span<const size_t> qubits);
    /// Channel: discard the qubits and prepare them maximally mixed.
    void replace_mixed(std::span<const size_t> qubits);
    /// Channel: remove coherences between computational states of the qubits.
    void dephase(std::span<const size_t> qubits);
    /// Appends fresh qubits in |0> after the current last qubit.
    void append_zero(size_t count);

    /// Reduced density matrix of the listed qubits, in listed order.
    CMat reduced(std::span<const size_t> qubits) const;
    double entropy(std::span<const size_t> qubits, EntropyKind kind) const;

    double trace() const;
    double norm() const;

   private:
    size_t n_ = 0;
    bool pure_ = true;
    CVec psi_;
    CMat rho_;
};

double entropy_of(const CMat &rho, EntropyKind kind);
double entropy_vn(const CMat &rho);
double entropy_renyi2(const CMat &rho);

/// S(R) + S(A) - S(RA) in bits.
double qmi(const DenseState &state, std::span<const size_t> region_r, std::span<const size_t> region_a, EntropyKind kind);

/// Trace distance (1/2)||a - b||_1 of two Hermitian matrices.
double trace_distance(const CMat &a, const CMat &b);

}  // namespace qmi

#endif
