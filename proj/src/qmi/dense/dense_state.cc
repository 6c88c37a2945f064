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

#include "qmi/dense/dense_state.h"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

namespace qmi {

namespace {

// Bit offsets of the listed qubits: pattern bit (k-1-j) lands on qubit q[j].
struct Layout {
    uint64_t mask = 0;
    std::vector<uint64_t> offsets;  // index offset of each pattern
    std::vector<uint64_t> bases;    // indices with all listed bits clear
};

uint64_t qubit_bit(size_t n, size_t q) {
    return uint64_t{1} << (n - 1 - q);
}

void check_qubits(size_t n, std::span<const size_t> qubits) {
    uint64_t seen = 0;
    for (size_t q : qubits) {
        if (q >= n) {
            throw std::invalid_argument("qubit " + std::to_string(q) + " out of range for " + std::to_string(n) + " qubits");
        }
        uint64_t b = qubit_bit(n, q);
        if (seen & b) {
            throw std::invalid_argument("qubit " + std::to_string(q) + " listed twice");
        }
        seen |= b;
    }
}

Layout layout(size_t n, std::span<const size_t> qubits) {
    check_qubits(n, qubits);
    Layout out;
    size_t k = qubits.size();
    out.offsets.assign(size_t{1} << k, 0);
    for (size_t j = 0; j < k; j++) {
        uint64_t b = qubit_bit(n, qubits[j]);
        out.mask |= b;
        uint64_t pbit = uint64_t{1} << (k - 1 - j);
        for (uint64_t x = 0; x < out.offsets.size(); x++) {
            if (x & pbit) out.offsets[x] |= b;
        }
    }
    uint64_t dim = uint64_t{1} << n;
    out.bases.reserve(dim >> k);
    for (uint64_t i = 0; i < dim; i++) {
        if ((i & out.mask) == 0) out.bases.push_back(i);
    }
    return out;
}

bool trailing(size_t n, std::span<const size_t> qubits) {
    for (size_t j = 0; j < qubits.size(); j++) {
        if (qubits[j] != n - qubits.size() + j) return false;
    }
    return true;
}

// m <- (I (x) u) m on the listed qubits, treating each column as a state.
void left_apply(CMat &m, const CMat &u, size_t n, std::span<const size_t> qubits) {
    if (trailing(n, qubits)) {
        Eigen::Index k = u.rows();
        Eigen::Map<CMat> view(m.data(), k, m.size() / k);
        CMat next = u * view;
        view = next;
        return;
    }
    Layout l = layout(n, qubits);
    Eigen::Index k = static_cast<Eigen::Index>(l.offsets.size());
    Eigen::Index nb = static_cast<Eigen::Index>(l.bases.size());
    CMat g(k, nb * m.cols());
    for (Eigen::Index c = 0; c < m.cols(); c++) {
        for (Eigen::Index b = 0; b < nb; b++) {
            for (Eigen::Index x = 0; x < k; x++) {
                g(x, c * nb + b) = m(static_cast<Eigen::Index>(l.bases[b] | l.offsets[x]), c);
            }
        }
    }
    g = (u * g).eval();
    for (Eigen::Index c = 0; c < m.cols(); c++) {
        for (Eigen::Index b = 0; b < nb; b++) {
            for (Eigen::Index x = 0; x < k; x++) {
                m(static_cast<Eigen::Index>(l.bases[b] | l.offsets[x]), c) = g(x, c * nb + b);
            }
        }
    }
}

std::atomic<uint64_t> g_health_warnings{0};

}  // namespace

uint64_t numerical_health_warnings() {
    return g_health_warnings.load();
}

DenseState DenseState::zero(size_t n, bool mixed) {
    if (n > (mixed ? kMaxMixedQubits : kMaxPureQubits)) {
        throw std::invalid_argument("dense register of " + std::to_string(n) + " qubits exceeds the " +
                                    (mixed ? "density-matrix" : "statevector") + " ceiling");
    }
    DenseState s;
    s.n_ = n;
    s.pure_ = !mixed;
    size_t d = size_t{1} << n;
    if (mixed) {
        s.rho_ = CMat::Zero(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
        s.rho_(0, 0) = 1;
    } else {
        s.psi_ = CVec::Zero(static_cast<Eigen::Index>(d));
        s.psi_(0) = 1;
    }
    return s;
}

DenseState DenseState::from_vector(CVec psi) {
    size_t d = static_cast<size_t>(psi.size());
    if (d == 0 || (d & (d - 1)) != 0) throw std::invalid_argument("state length must be a power of two");
    DenseState s;
    s.n_ = static_cast<size_t>(std::countr_zero(d));
    if (s.n_ > kMaxPureQubits) throw std::invalid_argument("statevector exceeds the dense ceiling");
    s.pure_ = true;
    s.psi_ = std::move(psi);
    return s;
}

DenseState DenseState::from_matrix(CMat rho) {
    size_t d = static_cast<size_t>(rho.rows());
    if (rho.rows() != rho.cols() || d == 0 || (d & (d - 1)) != 0) {
        throw std::invalid_argument("density matrix must be square with power-of-two size");
    }
    DenseState s;
    s.n_ = static_cast<size_t>(std::countr_zero(d));
    if (s.n_ > kMaxMixedQubits) throw std::invalid_argument("density matrix exceeds the dense ceiling");
    s.pure_ = false;
    s.rho_ = std::move(rho);
    return s;
}

CMat DenseState::density() const {
    if (!pure_) return rho_;
    return psi_ * psi_.adjoint();
}

void DenseState::make_mixed() {
    if (!pure_) return;
    if (n_ > kMaxMixedQubits) {
        throw std::invalid_argument("density matrix of " + std::to_string(n_) + " qubits exceeds the dense ceiling");
    }
    rho_ = psi_ * psi_.adjoint();
    psi_.resize(0);
    pure_ = false;
}

void DenseState::apply_trailing(const CMat &u) {
    size_t d = static_cast<size_t>(u.rows());
    if (u.rows() != u.cols() || d == 0 || (d & (d - 1)) != 0) throw std::invalid_argument("operator must be square with power-of-two size");
    size_t k = static_cast<size_t>(std::countr_zero(d));
    if (k > n_) throw std::invalid_argument("operator larger than the register");
    std::vector<size_t> qubits(k);
    for (size_t j = 0; j < k; j++) qubits[j] = n_ - k + j;
    apply(u, qubits);
}

void DenseState::apply(const CMat &u, std::span<const size_t> qubits) {
    if (u.rows() != (Eigen::Index{1} << qubits.size()) || u.cols() != u.rows()) {
        throw std::invalid_argument("operator size does not match the qubit list");
    }
    check_qubits(n_, qubits);
    if (pure_) {
        CMat col = psi_;
        left_apply(col, u, n_, qubits);
        psi_ = col;
        return;
    }
    left_apply(rho_, u, n_, qubits);
    CMat t = rho_.adjoint();
    left_apply(t, u, n_, qubits);
    rho_ = t.adjoint();
}

std::vector<double> DenseState::outcome_probabilities(std::span<const size_t> qubits) const {
    Layout l = layout(n_, qubits);
    std::vector<double> p(l.offsets.size(), 0.0);
    for (size_t x = 0; x < l.offsets.size(); x++) {
        double acc = 0;
        for (uint64_t b : l.bases) {
            auto i = static_cast<Eigen::Index>(b | l.offsets[x]);
            acc += pure_ ? std::norm(psi_(i)) : rho_(i, i).real();
        }
        p[x] = std::max(acc, 0.0);
    }
    return p;
}

double DenseState::project(std::span<const size_t> qubits, uint64_t pattern) {
    Layout l = layout(n_, qubits);
    if (pattern >= l.offsets.size()) throw std::invalid_argument("pattern out of range");
    uint64_t keep = l.offsets[pattern];
    double p = 0;
    if (pure_) {
        for (Eigen::Index i = 0; i < psi_.size(); i++) {
            if ((static_cast<uint64_t>(i) & l.mask) != keep) psi_(i) = 0;
        }
        p = psi_.squaredNorm();
        if (p > 0) psi_ /= std::sqrt(p);
        return p;
    }
    for (Eigen::Index i = 0; i < rho_.rows(); i++) {
        if ((static_cast<uint64_t>(i) & l.mask) != keep) {
            rho_.row(i).setZero();
            rho_.col(i).setZero();
        }
    }
    p = rho_.trace().real();
    if (p > 0) rho_ /= p;
    return p;
}

uint64_t DenseState::measure(std::span<const size_t> qubits, RngStream &rng, double &probability) {
    std::vector<double> p = outcome_probabilities(qubits);
    double total = 0;
    for (double v : p) total += v;
    double u = rng.uniform() * total;
    uint64_t pick = p.size() - 1;
    double acc = 0;
    for (uint64_t x = 0; x < p.size(); x++) {
        acc += p[x];
        if (u < acc) {
            pick = x;
            break;
        }
    }
    // Guard against landing on a zero-weight tail through rounding.
    while (p[pick] <= 0 && pick > 0) pick--;
    probability = p[pick] / total;
    if (probability < 1e-300) {
        throw TrajectoryUnderflow("trajectory weight underflow");
    }
    project(qubits, pick);
    return pick;
}

void DenseState::flip(std::span<const size_t> qubits, uint64_t pattern) {
    Layout l = layout(n_, qubits);
    uint64_t m = l.offsets.at(pattern);
    if (m == 0) return;
    if (pure_) {
        CVec next(psi_.size());
        for (Eigen::Index i = 0; i < psi_.size(); i++) next(static_cast<Eigen::Index>(static_cast<uint64_t>(i) ^ m)) = psi_(i);
        psi_ = std::move(next);
        return;
    }
    CMat next(rho_.rows(), rho_.cols());
    for (Eigen::Index j = 0; j < rho_.cols(); j++) {
        auto jj = static_cast<Eigen::Index>(static_cast<uint64_t>(j) ^ m);
        for (Eigen::Index i = 0; i < rho_.rows(); i++) {
            next(static_cast<Eigen::Index>(static_cast<uint64_t>(i) ^ m), jj) = rho_(i, j);
        }
    }
    rho_ = std::move(next);
}

namespace {

// sigma(a, b) = sum_k rho(a|k, b|k) over bases a, b of the layout.
CMat partial_sum(const CMat &rho, const Layout &l) {
    auto nb = static_cast<Eigen::Index>(l.bases.size());
    CMat sigma = CMat::Zero(nb, nb);
    for (uint64_t off : l.offsets) {
        for (Eigen::Index b = 0; b < nb; b++) {
            auto col = static_cast<Eigen::Index>(l.bases[b] | off);
            for (Eigen::Index a = 0; a < nb; a++) {
                sigma(a, b) += rho(static_cast<Eigen::Index>(l.bases[a] | off), col);
            }
        }
    }
    return sigma;
}

}  // namespace

void DenseState::reset_to_zero(std::span<const size_t> qubits) {
    make_mixed();
    Layout l = layout(n_, qubits);
    CMat sigma = partial_sum(rho_, l);
    rho_.setZero();
    auto nb = static_cast<Eigen::Index>(l.bases.size());
    for (Eigen::Index b = 0; b < nb; b++) {
        for (Eigen::Index a = 0; a < nb; a++) {
            rho_(static_cast<Eigen::Index>(l.bases[a]), static_cast<Eigen::Index>(l.bases[b])) = sigma(a, b);
        }
    }
}

void DenseState::replace_mixed(std::span<const size_t> qubits) {
    make_mixed();
    Layout l = layout(n_, qubits);
    CMat sigma = partial_sum(rho_, l) / static_cast<double>(l.offsets.size());
    rho_.setZero();
    auto nb = static_cast<Eigen::Index>(l.bases.size());
    for (uint64_t off : l.offsets) {
        for (Eigen::Index b = 0; b < nb; b++) {
            for (Eigen::Index a = 0; a < nb; a++) {
                rho_(static_cast<Eigen::Index>(l.bases[a] | off), static_cast<Eigen::Index>(l.bases[b] | off)) = sigma(a, b);
            }
        }
    }
}

void DenseState::dephase(std::span<const size_t> qubits) {
    make_mixed();
    Layout l = layout(n_, qubits);
    for (Eigen::Index j = 0; j < rho_.cols(); j++) {
        for (Eigen::Index i = 0; i < rho_.rows(); i++) {
            if ((static_cast<uint64_t>(i ^ j) & l.mask) != 0) rho_(i, j) = 0;
        }
    }
}

void DenseState::append_zero(size_t count) {
    if (count == 0) return;
    size_t n = n_ + count;
    if (n > (pure_ ? kMaxPureQubits : kMaxMixedQubits)) throw std::invalid_argument("appending exceeds the dense ceiling");
    if (pure_) {
        CVec next = CVec::Zero(Eigen::Index{1} << n);
        for (Eigen::Index i = 0; i < psi_.size(); i++) next(i << count) = psi_(i);
        psi_ = std::move(next);
    } else {
        CMat next = CMat::Zero(Eigen::Index{1} << n, Eigen::Index{1} << n);
        for (Eigen::Index j = 0; j < rho_.cols(); j++) {
            for (Eigen::Index i = 0; i < rho_.rows(); i++) next(i << count, j << count) = rho_(i, j);
        }
        rho_ = std::move(next);
    }
    n_ = n;
}

CMat DenseState::reduced(std::span<const size_t> qubits) const {
    check_qubits(n_, qubits);
    std::vector<size_t> rest;
    for (size_t q = 0; q < n_; q++) {
        if (std::find(qubits.begin(), qubits.end(), q) == qubits.end()) rest.push_back(q);
    }
    Layout keep = layout(n_, qubits);
    Layout drop = layout(n_, rest);
    auto k = static_cast<Eigen::Index>(keep.offsets.size());
    auto c = static_cast<Eigen::Index>(drop.offsets.size());
    if (pure_) {
        CMat psi(k, c);
        for (Eigen::Index j = 0; j < c; j++) {
            for (Eigen::Index i = 0; i < k; i++) psi(i, j) = psi_(static_cast<Eigen::Index>(keep.offsets[i] | drop.offsets[j]));
        }
        return psi * psi.adjoint();
    }
    CMat out = CMat::Zero(k, k);
    for (Eigen::Index e = 0; e < c; e++) {
        uint64_t off = drop.offsets[e];
        for (Eigen::Index y = 0; y < k; y++) {
            auto col = static_cast<Eigen::Index>(keep.offsets[y] | off);
            for (Eigen::Index x = 0; x < k; x++) out(x, y) += rho_(static_cast<Eigen::Index>(keep.offsets[x] | off), col);
        }
    }
    return out;
}

double DenseState::entropy(std::span<const size_t> qubits, EntropyKind kind) const {
    if (qubits.empty()) return 0.0;
    if (pure_ && 2 * qubits.size() > n_) {
        // A pure state has equal spectra on complementary regions.
        check_qubits(n_, qubits);
        std::vector<size_t> rest;
        for (size_t q = 0; q < n_; q++) {
            if (std::find(qubits.begin(), qubits.end(), q) == qubits.end()) rest.push_back(q);
        }
        return entropy(rest, kind);
    }
    return entropy_of(reduced(qubits), kind);
}

double DenseState::trace() const {
    return pure_ ? psi_.squaredNorm() : rho_.trace().real();
}

double DenseState::norm() const {
    return pure_ ? psi_.norm() : rho_.trace().real();
}

double entropy_vn(const CMat &rho) {
    Eigen::SelfAdjointEigenSolver<CMat> es(rho, Eigen::EigenvaluesOnly);
    double s = 0;
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); i++) {
        double l = es.eigenvalues()(i);
        if (l < -1e-8) g_health_warnings++;
        if (l > 1e-12) s -= l * std::log2(l);
    }
    return std::max(s, 0.0);
}

double entropy_renyi2(const CMat &rho) {
    double purity = rho.cwiseAbs2().sum();
    return std::max(-std::log2(purity), 0.0);
}

double entropy_of(const CMat &rho, EntropyKind kind) {
    return kind == EntropyKind::VonNeumann ? entropy_vn(rho) : entropy_renyi2(rho);
}

double qmi(const DenseState &state, std::span<const size_t> region_r, std::span<const size_t> region_a, EntropyKind kind) {
    for (size_t r : region_r) {
        if (std::find(region_a.begin(), region_a.end(), r) != region_a.end()) {
            throw std::invalid_argument("mutual information regions overlap");
        }
    }
    std::vector<size_t> both(region_r.begin(), region_r.end());
    both.insert(both.end(), region_a.begin(), region_a.end());
    return state.entropy(region_r, kind) + state.entropy(region_a, kind) - state.entropy(both, kind);
}

double trace_distance(const CMat &a, const CMat &b) {
    CMat diff = a - b;
    CMat herm = (diff + diff.adjoint()) / 2.0;
    Eigen::SelfAdjointEigenSolver<CMat> es(herm, Eigen::EigenvaluesOnly);
    return 0.5 * es.eigenvalues().cwiseAbs().sum();
}

}  // namespace qmi
