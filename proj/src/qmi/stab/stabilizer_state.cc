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

#include "qmi/stab/stabilizer_state.h"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace qmi {

namespace {

// Bit `col` of the stacked (x | z) vector.
bool sym_bit(const PauliString &p, size_t col) {
    return col < p.n ? p.x(col) : p.z(col - p.n);
}

void check_qubit(size_t q, size_t n) {
    if (q >= n) {
        throw std::out_of_range("qubit " + std::to_string(q) + " out of range for " + std::to_string(n) + " qubits");
    }
}

}  // namespace

size_t gf2_rank(std::vector<uint64_t> rows, size_t num_rows, size_t stride) {
    size_t rank = 0;
    for (size_t w = 0; w < stride && rank < num_rows; w++) {
        for (size_t b = 0; b < 64 && rank < num_rows; b++) {
            uint64_t mask = uint64_t{1} << b;
            size_t pivot = rank;
            while (pivot < num_rows && !(rows[pivot * stride + w] & mask)) {
                pivot++;
            }
            if (pivot == num_rows) {
                continue;
            }
            if (pivot != rank) {
                std::swap_ranges(
                    rows.begin() + static_cast<std::ptrdiff_t>(pivot * stride),
                    rows.begin() + static_cast<std::ptrdiff_t>((pivot + 1) * stride),
                    rows.begin() + static_cast<std::ptrdiff_t>(rank * stride));
            }
            const uint64_t *src = &rows[rank * stride];
            for (size_t r = rank + 1; r < num_rows; r++) {
                uint64_t *dst = &rows[r * stride];
                if (dst[w] & mask) {
                    for (size_t k = w; k < stride; k++) {
                        dst[k] ^= src[k];
                    }
                }
            }
            rank++;
        }
    }
    return rank;
}

StabilizerState::StabilizerState(size_t n) : n_(n) {
    gens_.reserve(n);
    for (size_t q = 0; q < n; q++) {
        gens_.push_back(PauliString::single(n, q, 'Z'));
    }
}

StabilizerState StabilizerState::maximally_mixed(size_t n) {
    StabilizerState s;
    s.n_ = n;
    return s;
}

void StabilizerState::add_generator(const PauliString &g) {
    if (g.n != n_ || !g.is_hermitian() || g.is_identity_up_to_phase()) {
        throw std::invalid_argument("generator must be a non-identity Hermitian Pauli on " + std::to_string(n_) + " qubits");
    }
    for (const auto &h : gens_) {
        if (!h.commutes(g)) {
            throw std::invalid_argument("generator " + g.str() + " anticommutes with " + h.str());
        }
    }
    gens_.push_back(g);
    std::string why;
    if (!validate(&why)) {
        gens_.pop_back();
        throw std::invalid_argument("generator " + g.str() + " rejected: " + why);
    }
}

void StabilizerState::apply(const CliffordOp &op, std::span<const size_t> targets) {
    size_t m = op.n;
    if (targets.size() != m) {
        throw std::invalid_argument("apply: target count does not match the op size");
    }
    for (size_t k = 0; k < m; k++) {
        check_qubit(targets[k], n_);
        for (size_t j = 0; j < k; j++) {
            if (targets[j] == targets[k]) {
                throw std::invalid_argument("apply: duplicate target " + std::to_string(targets[k]));
            }
        }
    }
    // Images of the letters X, Z, Y (Y = iXZ) on each target.
    std::vector<PauliString> images(3 * m);
    for (size_t k = 0; k < m; k++) {
        images[3 * k + 0] = op.x_images[k];
        images[3 * k + 1] = op.z_images[k];
        PauliString y = op.x_images[k] * op.z_images[k];
        y.phase = (y.phase + 1) & 3;
        images[3 * k + 2] = y;
    }
    PauliString acc(m);
    for (auto &g : gens_) {
        std::fill(acc.xs.begin(), acc.xs.end(), 0);
        std::fill(acc.zs.begin(), acc.zs.end(), 0);
        acc.phase = 0;
        for (size_t k = 0; k < m; k++) {
            size_t q = targets[k];
            bool x = g.x(q);
            bool z = g.z(q);
            if (x || z) {
                acc *= images[3 * k + (x ? (z ? 2 : 0) : 1)];
            }
        }
        for (size_t k = 0; k < m; k++) {
            g.set_x(targets[k], acc.x(k));
            g.set_z(targets[k], acc.z(k));
        }
        g.phase = (g.phase + acc.phase) & 3;
    }
}

void StabilizerState::apply_gate(std::string_view name, std::initializer_list<size_t> targets) {
    apply(CliffordOp::gate(name), std::span<const size_t>(targets.begin(), targets.size()));
}

std::optional<bool> StabilizerState::peek_z(size_t q) const {
    check_qubit(q, n_);
    for (const auto &g : gens_) {
        if (g.x(q)) {
            return std::nullopt;
        }
    }
    // Reduced row echelon form over the stacked (x | z) columns.
    std::vector<PauliString> rows = gens_;
    std::vector<size_t> pivot_cols;
    size_t rank = 0;
    for (size_t col = 0; col < 2 * n_ && rank < rows.size(); col++) {
        size_t p = rank;
        while (p < rows.size() && !sym_bit(rows[p], col)) {
            p++;
        }
        if (p == rows.size()) {
            continue;
        }
        std::swap(rows[p], rows[rank]);
        for (size_t r = 0; r < rows.size(); r++) {
            if (r != rank && sym_bit(rows[r], col)) {
                rows[r] *= rows[rank];
            }
        }
        pivot_cols.push_back(col);
        rank++;
    }
    PauliString target = PauliString::single(n_, q, 'Z');
    for (size_t r = 0; r < rank; r++) {
        if (sym_bit(target, pivot_cols[r])) {
            target *= rows[r];
        }
    }
    if (!target.is_identity_up_to_phase()) {
        return std::nullopt;
    }
    return target.phase == 2;
}

bool StabilizerState::measure_z(size_t q, RngStream &rng) {
    check_qubit(q, n_);
    size_t pivot = gens_.size();
    for (size_t i = 0; i < gens_.size(); i++) {
        if (gens_[i].x(q)) {
            pivot = i;
            break;
        }
    }
    if (pivot == gens_.size()) {
        if (auto known = peek_z(q)) {
            return *known;
        }
        // Z_q commutes with the group but is not in it: the qubit is
        // classically uncertain.
        bool outcome = rng.bit();
        PauliString z = PauliString::single(n_, q, 'Z');
        z.phase = outcome ? 2 : 0;
        gens_.push_back(z);
        return outcome;
    }
    for (size_t i = pivot + 1; i < gens_.size(); i++) {
        if (gens_[i].x(q)) {
            gens_[i] *= gens_[pivot];
        }
    }
    bool outcome = rng.bit();
    PauliString z = PauliString::single(n_, q, 'Z');
    z.phase = outcome ? 2 : 0;
    gens_[pivot] = z;
    return outcome;
}

void StabilizerState::trace_out(std::span<const size_t> qubits) {
    std::vector<size_t> sorted(qubits.begin(), qubits.end());
    std::sort(sorted.begin(), sorted.end());
    std::vector<bool> dropped(gens_.size(), false);
    for (size_t q : sorted) {
        check_qubit(q, n_);
        for (int comp = 0; comp < 2; comp++) {
            auto has = [&](const PauliString &g) { return comp == 0 ? g.x(q) : g.z(q); };
            size_t pivot = gens_.size();
            for (size_t i = 0; i < gens_.size(); i++) {
                if (!dropped[i] && has(gens_[i])) {
                    pivot = i;
                    break;
                }
            }
            if (pivot == gens_.size()) {
                continue;
            }
            for (size_t i = pivot + 1; i < gens_.size(); i++) {
                if (!dropped[i] && has(gens_[i])) {
                    gens_[i] *= gens_[pivot];
                }
            }
            dropped[pivot] = true;
        }
    }
    size_t w = 0;
    for (size_t i = 0; i < gens_.size(); i++) {
        if (!dropped[i]) {
            if (w != i) {
                gens_[w] = std::move(gens_[i]);
            }
            w++;
        }
    }
    gens_.resize(w);
}

void StabilizerState::append_zero(std::span<const size_t> qubits) {
    for (size_t q : qubits) {
        check_qubit(q, n_);
        for (const auto &g : gens_) {
            if (g.x(q) || g.z(q)) {
                throw std::logic_error("append_zero: qubit " + std::to_string(q) + " still carries generator support");
            }
        }
        gens_.push_back(PauliString::single(n_, q, 'Z'));
    }
}

void StabilizerState::dephase_z(size_t q) {
    check_qubit(q, n_);
    size_t pivot = gens_.size();
    for (size_t i = 0; i < gens_.size(); i++) {
        if (gens_[i].x(q)) {
            if (pivot == gens_.size()) {
                pivot = i;
            } else {
                gens_[i] *= gens_[pivot];
            }
        }
    }
    if (pivot != gens_.size()) {
        gens_.erase(gens_.begin() + static_cast<std::ptrdiff_t>(pivot));
    }
}

void StabilizerState::reset_or_discard(
    std::span<const size_t> qubits, StabResetMode mode, std::span<const uint8_t> outcomes) {
    switch (mode) {
        case StabResetMode::None:
            return;
        case StabResetMode::TraceOut:
            trace_out(qubits);
            return;
        case StabResetMode::ToZero:
            if (outcomes.size() != qubits.size()) {
                throw std::invalid_argument("reset to zero needs one recorded outcome per qubit");
            }
            for (size_t k = 0; k < qubits.size(); k++) {
                check_qubit(qubits[k], n_);
                if (outcomes[k]) {
                    for (auto &g : gens_) {
                        if (g.z(qubits[k])) {
                            g.phase ^= 2;
                        }
                    }
                }
            }
            return;
    }
}

size_t StabilizerState::entropy(std::span<const size_t> region) const {
    if (region.empty()) {
        return 0;
    }
    size_t w = words_for(n_);
    std::vector<uint64_t> outside(w, ~uint64_t{0});
    if (n_ % 64) {
        outside.back() = (uint64_t{1} << (n_ % 64)) - 1;
    }
    for (size_t q : region) {
        check_qubit(q, n_);
        outside[q >> 6] &= ~(uint64_t{1} << (q & 63));
    }
    size_t stride = 2 * w;
    std::vector<uint64_t> rows(gens_.size() * stride);
    for (size_t i = 0; i < gens_.size(); i++) {
        for (size_t k = 0; k < w; k++) {
            rows[i * stride + k] = gens_[i].xs[k] & outside[k];
            rows[i * stride + w + k] = gens_[i].zs[k] & outside[k];
        }
    }
    size_t rank_outside = gf2_rank(std::move(rows), gens_.size(), stride);
    size_t inside = gens_.size() - rank_outside;
    return region.size() - inside;
}

bool StabilizerState::validate(std::string *why) const {
    auto fail = [&](const std::string &msg) {
        if (why) {
            *why = msg;
        }
        return false;
    };
    if (gens_.size() > n_) {
        return fail("more generators than qubits");
    }
    for (size_t i = 0; i < gens_.size(); i++) {
        if (gens_[i].n != n_) {
            return fail("generator " + std::to_string(i) + " has the wrong size");
        }
        if (!gens_[i].is_hermitian()) {
            return fail("generator " + std::to_string(i) + " is not Hermitian");
        }
        for (size_t j = i + 1; j < gens_.size(); j++) {
            if (!gens_[i].commutes(gens_[j])) {
                return fail("generators " + std::to_string(i) + " and " + std::to_string(j) + " anticommute");
            }
        }
    }
    size_t w = words_for(n_);
    size_t stride = 2 * w;
    std::vector<uint64_t> rows(gens_.size() * stride);
    for (size_t i = 0; i < gens_.size(); i++) {
        std::copy(gens_[i].xs.begin(), gens_[i].xs.end(), rows.begin() + static_cast<std::ptrdiff_t>(i * stride));
        std::copy(gens_[i].zs.begin(), gens_[i].zs.end(), rows.begin() + static_cast<std::ptrdiff_t>(i * stride + w));
    }
    if (gf2_rank(std::move(rows), gens_.size(), stride) != gens_.size()) {
        return fail("generators are not independent");
    }
    return true;
}

StabilizerState bell_pairs_init(const SystemShape &shape) {
    shape.validate();
    size_t n = shape.total();
    StabilizerState s = StabilizerState::maximally_mixed(n);
    for (size_t i = 0; i < shape.n_r; i++) {
        size_t r = shape.r_begin() + i;
        size_t a = shape.a_begin() + i;
        PauliString xx(n);
        xx.set_x(r, true);
        xx.set_x(a, true);
        PauliString zz(n);
        zz.set_z(r, true);
        zz.set_z(a, true);
        s.add_generator(xx);
        s.add_generator(zz);
    }
    std::vector<size_t> rest;
    for (size_t q = shape.a_begin() + shape.n_r; q < n; q++) {
        rest.push_back(q);
    }
    s.append_zero(rest);
    return s;
}

long mutual_info(const StabilizerState &state, std::span<const size_t> region_r, std::span<const size_t> region_a) {
    for (size_t r : region_r) {
        if (std::find(region_a.begin(), region_a.end(), r) != region_a.end()) {
            throw std::invalid_argument("mutual_info: regions overlap at qubit " + std::to_string(r));
        }
    }
    std::vector<size_t> both(region_r.begin(), region_r.end());
    both.insert(both.end(), region_a.begin(), region_a.end());
    return static_cast<long>(state.entropy(region_r)) + static_cast<long>(state.entropy(region_a)) -
           static_cast<long>(state.entropy(both));
}

}  // namespace qmi
