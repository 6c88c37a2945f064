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

#ifndef QMI_STAB_STABILIZER_STATE_H
#define QMI_STAB_STABILIZER_STATE_H

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qmi/common/rng.h"
#include "qmi/common/shape.h"
#include "qmi/stab/clifford_op.h"
#include "qmi/stab/pauli_string.h"

namespace qmi {

enum class StabResetMode {
    ToZero,    // flip the measured qubit back to |0>
    None,      // leave the post-measurement state alone
    TraceOut,  // erase: the qubit becomes maximally mixed
};

/// A (possibly mixed) stabilizer state rho = prod_i (I + g_i) / 2^n over
/// independent commuting Hermitian generators g_i. Fewer than n generators
/// means the state is mixed.
class StabilizerState {
   public:
    StabilizerState() = default;
    /// All qubits in |0>.
    explicit StabilizerState(size_t n);
    static StabilizerState maximally_mixed(size_t n);

    size_t num_qubits() const {
        return n_;
    }
    size_t num_generators() const {
        return gens_.size();
    }
    bool is_pure() const {
        return gens_.size() == n_;
    }
    const std::vector<PauliString> &generators() const {
        return gens_;
    }

    /// Adds a generator. Throws if it does not commute with the group or is
    /// dependent on it.
    void add_generator(const PauliString &g);

    /// Conjugates every generator by `op` acting on `targets` (op qubit k maps
    /// to state qubit targets[k]).
    void apply(const CliffordOp &op, std::span<const size_t> targets);
    void apply_gate(std::string_view name, std::initializer_list<size_t> targets);

    /// Projective Z measurement. Returns the outcome bit.
    bool measure_z(size_t q, RngStream &rng);

    /// Deterministic value of Z_q if +-Z_q is in the group.
    std::optional<bool> peek_z(size_t q) const;

    /// Removes every generator component on `qubits` by symplectic elimination
    /// (X columns then Z columns, ascending qubit, lowest row as pivot) and
    /// drops the generators that cannot be cleaned.
    void trace_out(std::span<const size_t> qubits);

    /// Re-initialises untouched qubits (no generator support) to |0>.
    void append_zero(std::span<const size_t> qubits);

    /// Completely dephases in the Z basis (measure and forget).
    void dephase_z(size_t q);

    /// Post-measurement handling of `qubits`; `outcomes` are the recorded
    /// results (required for ToZero).
    void reset_or_discard(std::span<const size_t> qubits, StabResetMode mode, std::span<const uint8_t> outcomes);

    /// Von Neumann (equivalently any Renyi) entropy of `region` in bits:
    /// |region| minus the rank of the subgroup supported inside it.
    size_t entropy(std::span<const size_t> region) const;

    /// Commutation, Hermiticity and independence; describes the first
    /// violation in `why`.
    bool validate(std::string *why = nullptr) const;

   private:
    size_t n_ = 0;
    std::vector<PauliString> gens_;
};

/// Bell pairs between R_i and A_i for i < N_R; everything else in |0>.
StabilizerState bell_pairs_init(const SystemShape &shape);

/// S(R) + S(A) - S(RA) in bits.
long mutual_info(const StabilizerState &state, std::span<const size_t> region_r, std::span<const size_t> region_a);

/// Rank over GF(2) of bit-packed rows of `stride` words each.
size_t gf2_rank(std::vector<uint64_t> rows, size_t num_rows, size_t stride);

}  // namespace qmi

#endif
