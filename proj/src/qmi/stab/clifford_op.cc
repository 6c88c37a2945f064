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

#include "qmi/stab/clifford_op.h"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

namespace qmi {

namespace {

// Dense GF(2) matrix with bit-packed rows.
struct BitMatrix {
    size_t rows = 0;
    size_t cols = 0;
    size_t stride = 0;
    std::vector<uint64_t> data;

    BitMatrix(size_t r, size_t c) : rows(r), cols(c), stride(words_for(c)), data(r * words_for(c)) {
    }

    bool get(size_t r, size_t c) const {
        return (data[r * stride + (c >> 6)] >> (c & 63)) & 1;
    }
    void set(size_t r, size_t c, bool v) {
        uint64_t &w = data[r * stride + (c >> 6)];
        uint64_t m = uint64_t{1} << (c & 63);
        w = v ? (w | m) : (w & ~m);
    }
    uint64_t *row(size_t r) {
        return &data[r * stride];
    }
    const uint64_t *row(size_t r) const {
        return &data[r * stride];
    }
    void xor_row_into(size_t dst, const BitMatrix &src, size_t src_row) {
        uint64_t *d = row(dst);
        const uint64_t *s = src.row(src_row);
        for (size_t w = 0; w < stride; w++) {
            d[w] ^= s[w];
        }
    }

    BitMatrix operator*(const BitMatrix &rhs) const {
        BitMatrix out(rows, rhs.cols);
        for (size_t r = 0; r < rows; r++) {
            for (size_t k = 0; k < cols; k++) {
                if (get(r, k)) {
                    out.xor_row_into(r, rhs, k);
                }
            }
        }
        return out;
    }

    BitMatrix transposed() const {
        BitMatrix out(cols, rows);
        for (size_t r = 0; r < rows; r++) {
            for (size_t c = 0; c < cols; c++) {
                if (get(r, c)) {
                    out.set(c, r, true);
                }
            }
        }
        return out;
    }
};

// Random symmetric (Gamma) or unit lower-triangular (Delta) layers.
BitMatrix random_symmetric(size_t n, RngStream &rng) {
    BitMatrix m(n, n);
    for (size_t i = 0; i < n; i++) {
        m.set(i, i, rng.bit());
        for (size_t j = 0; j < i; j++) {
            bool b = rng.bit();
            m.set(i, j, b);
            m.set(j, i, b);
        }
    }
    return m;
}

BitMatrix random_unit_lower(size_t n, RngStream &rng) {
    BitMatrix m(n, n);
    for (size_t i = 0; i < n; i++) {
        m.set(i, i, true);
        for (size_t j = 0; j < i; j++) {
            m.set(i, j, rng.bit());
        }
    }
    return m;
}

// Forward substitution; the inverse of a unit lower-triangular matrix is
// again unit lower-triangular.
BitMatrix inverse_unit_lower(const BitMatrix &l) {
    size_t n = l.rows;
    BitMatrix inv(n, n);
    for (size_t i = 0; i < n; i++) {
        inv.set(i, i, true);
        for (size_t j = 0; j < i; j++) {
            if (l.get(i, j)) {
                inv.xor_row_into(i, inv, j);
            }
        }
    }
    return inv;
}

// Samples the Hadamard layer and qubit permutation from the quantum Mallows
// distribution.
void sample_mallows(size_t n, RngStream &rng, std::vector<bool> &had, std::vector<size_t> &perm) {
    had.assign(n, false);
    perm.assign(n, 0);
    std::vector<size_t> remaining(n);
    for (size_t i = 0; i < n; i++) {
        remaining[i] = i;
    }
    for (size_t i = 0; i < n; i++) {
        size_t m = n - i;
        double eps = std::pow(4.0, -static_cast<double>(m));
        double r = rng.uniform();
        auto index = static_cast<size_t>(-std::ceil(std::log2(r + (1.0 - r) * eps)));
        if (index >= 2 * m) {
            index = 2 * m - 1;
        }
        had[i] = index < m;
        size_t k = had[i] ? index : 2 * m - index - 1;
        perm[i] = remaining[k];
        remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(k));
    }
}

// [[Delta, 0], [Gamma Delta, Delta^{-T}]]
BitMatrix borel_block(const BitMatrix &gamma, const BitMatrix &delta) {
    size_t n = delta.rows;
    BitMatrix prod = gamma * delta;
    BitMatrix inv_t = inverse_unit_lower(delta).transposed();
    BitMatrix out(2 * n, 2 * n);
    for (size_t i = 0; i < n; i++) {
        for (size_t j = 0; j < n; j++) {
            out.set(i, j, delta.get(i, j));
            out.set(n + i, j, prod.get(i, j));
            out.set(n + i, n + j, inv_t.get(i, j));
        }
    }
    return out;
}

PauliString row_to_pauli(const BitMatrix &m, size_t r, size_t n, bool negative) {
    PauliString p(n);
    for (size_t q = 0; q < n; q++) {
        p.set_x(q, m.get(r, q));
        p.set_z(q, m.get(r, n + q));
    }
    p.phase = negative ? 2 : 0;
    return p;
}

}  // namespace

CliffordOp CliffordOp::identity(size_t n) {
    CliffordOp op;
    op.n = n;
    for (size_t q = 0; q < n; q++) {
        op.x_images.push_back(PauliString::single(n, q, 'X'));
        op.z_images.push_back(PauliString::single(n, q, 'Z'));
    }
    return op;
}

CliffordOp CliffordOp::gate(std::string_view name) {
    auto one = [](const char *x, const char *z) {
        CliffordOp op;
        op.n = 1;
        op.x_images = {PauliString::from_str(x)};
        op.z_images = {PauliString::from_str(z)};
        return op;
    };
    auto two = [](const char *x0, const char *x1, const char *z0, const char *z1) {
        CliffordOp op;
        op.n = 2;
        op.x_images = {PauliString::from_str(x0), PauliString::from_str(x1)};
        op.z_images = {PauliString::from_str(z0), PauliString::from_str(z1)};
        return op;
    };
    if (name == "I") return one("+X", "+Z");
    if (name == "X") return one("+X", "-Z");
    if (name == "Y") return one("-X", "-Z");
    if (name == "Z") return one("-X", "+Z");
    if (name == "H") return one("+Z", "+X");
    if (name == "S") return one("+Y", "+Z");
    if (name == "S_DAG") return one("-Y", "+Z");
    if (name == "CX") return two("+XX", "+_X", "+Z_", "+ZZ");
    if (name == "CZ") return two("+XZ", "+ZX", "+Z_", "+_Z");
    if (name == "SWAP") return two("+_X", "+X_", "+_Z", "+Z_");
    throw std::invalid_argument("unknown gate '" + std::string(name) + "'");
}

bool CliffordOp::is_valid() const {
    if (x_images.size() != n || z_images.size() != n) {
        return false;
    }
    for (size_t i = 0; i < n; i++) {
        const PauliString &xi = x_images[i];
        const PauliString &zi = z_images[i];
        if (xi.n != n || zi.n != n || !xi.is_hermitian() || !zi.is_hermitian()) {
            return false;
        }
        for (size_t j = 0; j < n; j++) {
            if (!xi.commutes(x_images[j]) || !zi.commutes(z_images[j])) {
                return false;
            }
            if (xi.commutes(z_images[j]) != (i != j)) {
                return false;
            }
        }
    }
    return true;
}

PauliString CliffordOp::conjugate(const PauliString &p) const {
    if (p.n != n) {
        throw std::invalid_argument("conjugate: size mismatch");
    }
    PauliString out(n);
    out.phase = p.phase;
    for (size_t q = 0; q < n; q++) {
        bool x = p.x(q);
        bool z = p.z(q);
        if (x && z) {
            // Y = i X Z.
            out.phase = (out.phase + 1) & 3;
        }
        if (x) {
            out *= x_images[q];
        }
        if (z) {
            out *= z_images[q];
        }
    }
    return out;
}

CliffordOp CliffordOp::after(const CliffordOp &first) const {
    CliffordOp out;
    out.n = n;
    for (size_t q = 0; q < n; q++) {
        out.x_images.push_back(conjugate(first.x_images[q]));
        out.z_images.push_back(conjugate(first.z_images[q]));
    }
    return out;
}

CliffordOp random_clifford(size_t n, RngStream &rng) {
    if (n < 1) {
        throw std::invalid_argument("random_clifford needs at least one qubit");
    }
    std::vector<bool> had;
    std::vector<size_t> perm;
    sample_mallows(n, rng, had, perm);

    BitMatrix gamma1 = random_symmetric(n, rng);
    BitMatrix gamma2 = random_symmetric(n, rng);
    BitMatrix delta1 = random_unit_lower(n, rng);
    BitMatrix delta2 = random_unit_lower(n, rng);
    BitMatrix left = borel_block(gamma1, delta1);
    BitMatrix right = borel_block(gamma2, delta2);

    // Permute and Hadamard-swap the rows of the right Borel factor.
    BitMatrix middle(2 * n, 2 * n);
    for (size_t i = 0; i < n; i++) {
        size_t src_x = perm[i];
        size_t src_z = n + perm[i];
        size_t dst_x = had[i] ? n + i : i;
        size_t dst_z = had[i] ? i : n + i;
        middle.xor_row_into(dst_x, right, src_x);
        middle.xor_row_into(dst_z, right, src_z);
    }
    BitMatrix table = left * middle;

    CliffordOp op;
    op.n = n;
    for (size_t i = 0; i < n; i++) {
        op.x_images.push_back(row_to_pauli(table, i, n, rng.bit()));
    }
    for (size_t i = 0; i < n; i++) {
        op.z_images.push_back(row_to_pauli(table, n + i, n, rng.bit()));
    }
    return op;
}

}  // namespace qmi
