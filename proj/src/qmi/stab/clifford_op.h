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

#ifndef QMI_STAB_CLIFFORD_OP_H
#define QMI_STAB_CLIFFORD_OP_H

#include <string_view>
#include <vector>

#include "qmi/common/rng.h"
#include "qmi/stab/pauli_string.h"

namespace qmi {

/// A Clifford unitary stored by its action on the Pauli generators:
/// U X_q U^dagger = x_images[q], U Z_q U^dagger = z_images[q].
struct CliffordOp {
    size_t n = 0;
    std::vector<PauliString> x_images;
    std::vector<PauliString> z_images;

    static CliffordOp identity(size_t n);
    /// Named gates: "I", "X", "Y", "Z", "H", "S", "S_DAG" (one qubit) and
    /// "CX", "CZ", "SWAP" (two qubits, first qubit is the control).
    static CliffordOp gate(std::string_view name);

    /// Images are Hermitian and obey the canonical commutation relations.
    bool is_valid() const;

    /// U P U^dagger for an n-qubit Pauli string P.
    PauliString conjugate(const PauliString &p) const;

    /// The op that applies `first` and then `*this`.
    CliffordOp after(const CliffordOp &first) const;

    bool operator==(const CliffordOp &other) const {
        return n == other.n && x_images == other.x_images && z_images == other.z_images;
    }
};

/// Uniformly distributed element of the n-qubit Clifford group (modulo
/// global phase), via the Hadamard-free canonical form of Bravyi and Maslov.
CliffordOp random_clifford(size_t n, RngStream &rng);

}  // namespace qmi

#endif
