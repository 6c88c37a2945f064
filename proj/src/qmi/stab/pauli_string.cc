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

#include "qmi/stab/pauli_string.h"

#include <bit>
#include <stdexcept>

namespace qmi {

namespace {

// Number of Y letters, i.e. the i-power gained when rewriting the letter
// product as i^k X^x Z^z.
unsigned count_y(const PauliString &p) {
    unsigned c = 0;
    for (size_t w = 0; w < p.xs.size(); w++) {
        c += std::popcount(p.xs[w] & p.zs[w]);
    }
    return c;
}

}  // namespace

PauliString PauliString::from_str(std::string_view text) {
    uint8_t phase = 0;
    if (!text.empty() && text[0] == '+') {
        text.remove_prefix(1);
    } else if (!text.empty() && text[0] == '-') {
        phase = 2;
        text.remove_prefix(1);
    }
    if (!text.empty() && text[0] == 'i') {
        phase = (phase + 1) & 3;
        text.remove_prefix(1);
    }
    PauliString p(text.size());
    p.phase = phase;
    for (size_t q = 0; q < text.size(); q++) {
        switch (text[q]) {
            case '_':
            case 'I':
                break;
            case 'X':
                p.set_x(q, true);
                break;
            case 'Y':
                p.set_x(q, true);
                p.set_z(q, true);
                break;
            case 'Z':
                p.set_z(q, true);
                break;
            default:
                throw std::invalid_argument("bad Pauli letter '" + std::string(1, text[q]) + "'");
        }
    }
    return p;
}

PauliString PauliString::single(size_t n, size_t q, char letter) {
    PauliString p(n);
    p.set_x(q, letter == 'X' || letter == 'Y');
    p.set_z(q, letter == 'Z' || letter == 'Y');
    return p;
}

char PauliString::letter(size_t q) const {
    static constexpr char kLetters[4] = {'_', 'X', 'Z', 'Y'};
    return kLetters[x(q) | (z(q) << 1)];
}

bool PauliString::is_identity_up_to_phase() const {
    for (size_t w = 0; w < xs.size(); w++) {
        if (xs[w] | zs[w]) {
            return false;
        }
    }
    return true;
}

size_t PauliString::weight() const {
    size_t c = 0;
    for (size_t w = 0; w < xs.size(); w++) {
        c += std::popcount(xs[w] | zs[w]);
    }
    return c;
}

bool PauliString::commutes(const PauliString &other) const {
    uint64_t acc = 0;
    for (size_t w = 0; w < xs.size(); w++) {
        acc ^= (xs[w] & other.zs[w]) ^ (zs[w] & other.xs[w]);
    }
    return (std::popcount(acc) & 1) == 0;
}

PauliString &PauliString::operator*=(const PauliString &rhs) {
    if (rhs.n != n) {
        throw std::invalid_argument("Pauli product of mismatched sizes");
    }
    // In the X^x Z^z form, X^a Z^b X^c Z^d = (-1)^{b.c} X^{a+c} Z^{b+d}.
    unsigned e = phase + count_y(*this) + rhs.phase + count_y(rhs);
    unsigned anti = 0;
    for (size_t w = 0; w < xs.size(); w++) {
        anti += std::popcount(zs[w] & rhs.xs[w]);
        xs[w] ^= rhs.xs[w];
        zs[w] ^= rhs.zs[w];
    }
    e += 2 * anti;
    phase = static_cast<uint8_t>((e - count_y(*this)) & 3);
    return *this;
}

std::string PauliString::str() const {
    static constexpr const char *kPhase[4] = {"+", "+i", "-", "-i"};
    std::string out = kPhase[phase & 3];
    for (size_t q = 0; q < n; q++) {
        out.push_back(letter(q));
    }
    return out;
}

}  // namespace qmi
