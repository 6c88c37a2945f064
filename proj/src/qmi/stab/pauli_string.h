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

#ifndef QMI_STAB_PAULI_STRING_H
#define QMI_STAB_PAULI_STRING_H

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace qmi {

inline size_t words_for(size_t n) {
    return (n + 63) / 64;
}

/// A Pauli product i^phase * P_0 ⊗ ... ⊗ P_{n-1} with letters P_q ∈ {I, X, Y, Z}.
///
/// Letter q is encoded as (x_q, z_q): I=(0,0), X=(1,0), Y=(1,1), Z=(0,1).
/// Hermitian strings have phase 0 (+1) or 2 (-1).
struct PauliString {
    size_t n = 0;
    std::vector<uint64_t> xs;
    std::vector<uint64_t> zs;
    uint8_t phase = 0;

    PauliString() = default;
    explicit PauliString(size_t num_qubits) : n(num_qubits), xs(words_for(num_qubits)), zs(words_for(num_qubits)) {
    }

    /// Parses strings like "+XZ_Y", "-ZZ", "iX" ('_' or 'I' for identity).
    static PauliString from_str(std::string_view text);
    static PauliString single(size_t n, size_t q, char letter);

    bool x(size_t q) const {
        return (xs[q >> 6] >> (q & 63)) & 1;
    }
    bool z(size_t q) const {
        return (zs[q >> 6] >> (q & 63)) & 1;
    }
    void set_x(size_t q, bool v) {
        set_bit(xs, q, v);
    }
    void set_z(size_t q, bool v) {
        set_bit(zs, q, v);
    }
    char letter(size_t q) const;

    bool is_identity_up_to_phase() const;
    bool is_hermitian() const {
        return (phase & 1) == 0;
    }
    /// True when the Hermitian string carries a minus sign.
    bool negative() const {
        return phase == 2;
    }
    size_t weight() const;

    /// Symplectic inner product is zero.
    bool commutes(const PauliString &other) const;

    /// Right-multiplies in place: *this = *this * rhs.
    PauliString &operator*=(const PauliString &rhs);
    PauliString operator*(const PauliString &rhs) const {
        PauliString r = *this;
        r *= rhs;
        return r;
    }

    bool operator==(const PauliString &other) const {
        return n == other.n && phase == other.phase && xs == other.xs && zs == other.zs;
    }
    bool operator!=(const PauliString &other) const {
        return !(*this == other);
    }

    std::string str() const;

   private:
    static void set_bit(std::vector<uint64_t> &w, size_t q, bool v) {
        uint64_t m = uint64_t{1} << (q & 63);
        if (v) {
            w[q >> 6] |= m;
        } else {
            w[q >> 6] &= ~m;
        }
    }
};

}  // namespace qmi

#endif
