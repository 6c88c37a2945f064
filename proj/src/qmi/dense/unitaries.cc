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

#include "qmi/dense/unitaries.h"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qmi {

CMat haar_unitary(size_t dim, RngStream &rng) {
    if (dim == 0) throw std::invalid_argument("unitary dimension must be positive");
    auto d = static_cast<Eigen::Index>(dim);
    CMat z(d, d);
    for (Eigen::Index j = 0; j < d; j++) {
        for (Eigen::Index i = 0; i < d; i++) {
            double re = rng.normal();
            double im = rng.normal();
            z(i, j) = cplx(re, im) / std::sqrt(2.0);
        }
    }
    // QR of a Ginibre matrix with the phases of R's diagonal moved into Q.
    Eigen::HouseholderQR<CMat> qr(z);
    CMat q = qr.householderQ();
    const CMat &r = qr.matrixQR();
    for (Eigen::Index j = 0; j < d; j++) {
        cplx rjj = r(j, j);
        double mag = std::abs(rjj);
        q.col(j) *= mag > 0 ? rjj / mag : cplx(1);
    }
    return q;
}

HamiltonianParams draw_ising(size_t n, double t_h, RngStream &rng) {
    HamiltonianParams p;
    p.kind = HamiltonianKind::Ising;
    p.n = n;
    p.t_h = t_h;
    auto m = static_cast<Eigen::Index>(n);
    p.couplings = Eigen::MatrixXd::Zero(m, m);
    for (Eigen::Index i = 0; i < m; i++) {
        for (Eigen::Index j = i + 1; j < m; j++) {
            p.couplings(i, j) = p.couplings(j, i) = rng.normal();
        }
    }
    p.field_x.resize(m);
    p.field_z.resize(m);
    for (Eigen::Index i = 0; i < m; i++) p.field_x(i) = rng.normal();
    for (Eigen::Index i = 0; i < m; i++) p.field_z(i) = rng.normal();
    return p;
}

HamiltonianParams mfim(size_t n, double t_h, double h_x, double h_y) {
    HamiltonianParams p;
    p.kind = HamiltonianKind::Mfim;
    p.n = n;
    p.t_h = t_h;
    p.h_x = h_x;
    p.h_y = h_y;
    return p;
}

CMat hamiltonian_matrix(const HamiltonianParams &p) {
    size_t n = p.n;
    if (n == 0 || n > kMaxPureQubits) throw std::invalid_argument("hamiltonian qubit count out of range");
    auto d = Eigen::Index{1} << n;
    auto bit = [n](size_t q) { return Eigen::Index{1} << (n - 1 - q); };
    auto z = [](Eigen::Index i, Eigen::Index b) { return (i & b) ? -1.0 : 1.0; };
    CMat h = CMat::Zero(d, d);
    if (p.kind == HamiltonianKind::Ising) {
        auto m = static_cast<Eigen::Index>(n);
        if (p.couplings.rows() != m || p.couplings.cols() != m || p.field_x.size() != m || p.field_z.size() != m) {
            throw std::invalid_argument("ising parameters do not match the qubit count");
        }
        for (Eigen::Index i = 0; i < d; i++) {
            double diag = 0;
            for (size_t a = 0; a < n; a++) {
                diag += p.field_z(static_cast<Eigen::Index>(a)) * z(i, bit(a));
                for (size_t b = a + 1; b < n; b++) {
                    diag += p.couplings(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) * z(i, bit(a)) * z(i, bit(b));
                }
            }
            h(i, i) += diag;
            for (size_t a = 0; a < n; a++) h(i ^ bit(a), i) += p.field_x(static_cast<Eigen::Index>(a));
        }
    } else {
        for (Eigen::Index i = 0; i < d; i++) {
            for (size_t a = 0; a < n; a++) {
                Eigen::Index b = bit(a);
                h(i ^ b, i) += p.h_x;
                // Y|0> = i|1>, Y|1> = -i|0>.
                h(i ^ b, i) += p.h_y * ((i & b) ? cplx(0, -1) : cplx(0, 1));
            }
            for (size_t a = 0; a + 1 < n; a++) h(i ^ bit(a) ^ bit(a + 1), i) += 1.0;
        }
    }
    if ((h - h.adjoint()).cwiseAbs().maxCoeff() > 1e-12) {
        throw std::logic_error("hamiltonian assembly is not Hermitian");
    }
    return h;
}

CMat hamiltonian_unitary(const HamiltonianParams &params) {
    CMat h = hamiltonian_matrix(params);
    Eigen::SelfAdjointEigenSolver<CMat> es(h);
    const auto &v = es.eigenvectors();
    Eigen::VectorXcd phases(h.rows());
    for (Eigen::Index i = 0; i < h.rows(); i++) {
        phases(i) = std::exp(cplx(0, -es.eigenvalues()(i) * params.t_h));
    }
    return v * phases.asDiagonal() * v.adjoint();
}

namespace {

CMat rotation(double theta, double phi) {
    // exp(-i phi Y) exp(-i theta X)
    CMat rx(2, 2);
    rx << std::cos(theta), cplx(0, -std::sin(theta)), cplx(0, -std::sin(theta)), std::cos(theta);
    CMat ry(2, 2);
    ry << std::cos(phi), -std::sin(phi), std::sin(phi), std::cos(phi);
    return ry * rx;
}

CMat kron(const CMat &a, const CMat &b) {
    CMat out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); i++) {
        for (Eigen::Index j = 0; j < a.cols(); j++) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

// Diagonal of the CZ layer on pairs (first, first + 1), (first + 2, first + 3), ...
Eigen::VectorXcd cz_layer(size_t n, size_t first) {
    auto d = Eigen::Index{1} << n;
    Eigen::VectorXcd diag = Eigen::VectorXcd::Ones(d);
    for (size_t a = first; a + 1 < n; a += 2) {
        Eigen::Index both = (Eigen::Index{1} << (n - 1 - a)) | (Eigen::Index{1} << (n - 2 - a));
        for (Eigen::Index i = 0; i < d; i++) {
            if ((i & both) == both) diag(i) = -diag(i);
        }
    }
    return diag;
}

}  // namespace

CMat brickwork_unitary(size_t n, const std::vector<BrickworkLayer> &layers) {
    if (n < 2) throw std::invalid_argument("brickwork needs at least two qubits");
    auto d = Eigen::Index{1} << n;
    Eigen::VectorXcd even = cz_layer(n, 0);
    Eigen::VectorXcd odd = cz_layer(n, 1);
    CMat u = CMat::Identity(d, d);
    for (const auto &layer : layers) {
        if (layer.theta.size() != n || layer.phi.size() != n) throw std::invalid_argument("brickwork layer angle count mismatch");
        CMat local = rotation(layer.theta[0], layer.phi[0]);
        for (size_t q = 1; q < n; q++) local = kron(local, rotation(layer.theta[q], layer.phi[q]));
        CMat step = odd.asDiagonal() * (even.asDiagonal() * local);
        u = (step * u).eval();
    }
    return u;
}

CMat brickwork_unitary(size_t n, size_t n_layers, RngStream &rng) {
    std::vector<BrickworkLayer> layers(n_layers);
    for (auto &layer : layers) {
        layer.theta.resize(n);
        layer.phi.resize(n);
        for (size_t q = 0; q < n; q++) {
            layer.phi[q] = 2 * std::numbers::pi * rng.uniform();
            layer.theta[q] = 2 * std::numbers::pi * rng.uniform();
        }
    }
    if (n_layers == 0) return CMat::Identity(Eigen::Index{1} << n, Eigen::Index{1} << n);
    return brickwork_unitary(n, layers);
}

std::string_view to_string(EnsembleKind k) {
    switch (k) {
        case EnsembleKind::Haar:
            return "haar";
        case EnsembleKind::Ising:
            return "ising";
        case EnsembleKind::Mfim:
            return "mfim";
        case EnsembleKind::Brickwork:
            return "brickwork";
    }
    return "?";
}

EnsembleKind parse_ensemble(std::string_view s) {
    if (s == "haar") return EnsembleKind::Haar;
    if (s == "ising") return EnsembleKind::Ising;
    if (s == "mfim") return EnsembleKind::Mfim;
    if (s == "brickwork") return EnsembleKind::Brickwork;
    throw std::invalid_argument("unknown dense ensemble '" + std::string(s) + "'");
}

UnitarySequence::UnitarySequence(EnsembleSpec spec, size_t n_qubits, RngStream rng)
    : spec_(spec), n_(n_qubits), rng_(std::move(rng)) {
    if (n_ == 0 || n_ > kMaxPureQubits) throw std::invalid_argument("unitary footprint out of range");
}

const CMat &UnitarySequence::next() {
    if (spec_.identical) {
        if (!fixed_) fixed_ = draw();
        return *fixed_;
    }
    current_ = draw();
    return current_;
}

CMat UnitarySequence::draw() {
    switch (spec_.kind) {
        case EnsembleKind::Haar:
            return haar_unitary(size_t{1} << n_, rng_);
        case EnsembleKind::Ising:
            return hamiltonian_unitary(draw_ising(n_, spec_.t_h, rng_));
        case EnsembleKind::Mfim:
            return hamiltonian_unitary(mfim(n_, spec_.t_h, spec_.h_x, spec_.h_y));
        case EnsembleKind::Brickwork:
            return brickwork_unitary(n_, spec_.layers, rng_);
    }
    throw std::logic_error("unhandled ensemble");
}

}  // namespace qmi
