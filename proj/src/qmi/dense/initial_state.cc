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

#include "qmi/dense/initial_state.h"

#include <cmath>
#include <stdexcept>
#include <string>

#include "qmi/dense/protocol.h"

namespace qmi {

std::string_view to_string(InitialFamily f) {
    switch (f) {
        case InitialFamily::BellPairs:
            return "bell-pairs";
        case InitialFamily::PerturbedHaar:
            return "perturbed-haar";
        case InitialFamily::CqState:
            return "cq-state";
        case InitialFamily::CqProbe:
            return "cq-probe";
        case InitialFamily::LateTimeConditional:
            return "late-time-conditional";
        case InitialFamily::LateTimeUnconditional:
            return "late-time-unconditional";
    }
    return "?";
}

InitialFamily parse_initial_family(std::string_view s) {
    for (auto f : {InitialFamily::BellPairs, InitialFamily::PerturbedHaar, InitialFamily::CqState, InitialFamily::CqProbe,
                   InitialFamily::LateTimeConditional, InitialFamily::LateTimeUnconditional}) {
        if (to_string(f) == s) return f;
    }
    throw std::invalid_argument("unknown initial state family '" + std::string(s) + "'");
}

namespace {

double min_eigenvalue(const CMat &m) {
    Eigen::SelfAdjointEigenSolver<CMat> es((m + m.adjoint()) / 2.0, Eigen::EigenvaluesOnly);
    return es.eigenvalues()(0);
}

CVec bell_vector(const SystemShape &shape) {
    size_t n_ra = shape.n_r + shape.n_a;
    CVec psi = CVec::Zero(Eigen::Index{1} << n_ra);
    size_t dr = size_t{1} << shape.n_r;
    for (size_t j = 0; j < dr; j++) {
        // R_i pairs with A_i; the remaining A qubits start in |0>.
        size_t index = (j << shape.n_a) | (j << (shape.n_a - shape.n_r));
        psi(static_cast<Eigen::Index>(index)) = 1 / std::sqrt(static_cast<double>(dr));
    }
    return psi;
}

CVec perturbed(CVec v, double delta) {
    v(0) += delta;
    return v / v.norm();
}

CVec random_vector(size_t dim, RngStream &rng) {
    CVec v(static_cast<Eigen::Index>(dim));
    for (Eigen::Index i = 0; i < v.size(); i++) {
        double re = rng.normal();
        double im = rng.normal();
        v(i) = cplx(re, im);
    }
    return v / v.norm();
}

DenseState with_bath(DenseState s, size_t n_b) {
    s.append_zero(n_b);
    return s;
}

UnitarySequence &need(UnitarySequence *seq) {
    if (!seq) throw std::invalid_argument("late-time initial states need a preparation ensemble");
    return *seq;
}

}  // namespace

double max_probe_mixing(const ProbeComponents &probe) {
    CMat dir = probe.mode + probe.mode.adjoint();
    if (dir.cwiseAbs().maxCoeff() < 1e-14) throw std::invalid_argument("probe mode has no Hermitian part");
    if (min_eigenvalue(probe.fixed_point) < -1e-10) throw std::invalid_argument("probe fixed point is not positive");
    double lo = 0;
    double hi = 1;
    while (min_eigenvalue(probe.fixed_point + hi * dir) >= 0) {
        hi *= 2;
        if (hi > 1e12) throw std::invalid_argument("probe mixing is unbounded");
    }
    while (hi - lo > 1e-7) {
        double mid = (lo + hi) / 2;
        (min_eigenvalue(probe.fixed_point + mid * dir) >= 0 ? lo : hi) = mid;
    }
    return lo;
}

CMat probe_density(const ProbeComponents &probe, double a) {
    const CMat &fix = probe.fixed_point;
    Eigen::Index d = fix.rows();
    CMat rho = CMat::Zero(2 * d, 2 * d);
    rho.topLeftCorner(d, d) = fix / 2.0;
    rho.bottomRightCorner(d, d) = (fix + a * (probe.mode + probe.mode.adjoint())) / 2.0;
    return rho;
}

DenseState make_initial_state(
    const InitialStateSpec &spec, const SystemShape &shape, RngStream &rng, UnitarySequence *preparation, const ProbeComponents *probe) {
    shape.validate();
    if (spec.delta < 0) throw std::invalid_argument("delta must be non-negative");
    size_t n_ra = shape.n_r + shape.n_a;
    switch (spec.family) {
        case InitialFamily::BellPairs:
            return with_bath(DenseState::from_vector(bell_vector(shape)), shape.n_b);
        case InitialFamily::PerturbedHaar:
            return with_bath(DenseState::from_vector(perturbed(random_vector(size_t{1} << n_ra, rng), spec.delta)), shape.n_b);
        case InitialFamily::CqState: {
            auto da = Eigen::Index{1} << shape.n_a;
            auto dr = Eigen::Index{1} << shape.n_r;
            CMat basis = haar_unitary(static_cast<size_t>(da), rng);
            CMat rho = CMat::Zero(dr * da, dr * da);
            for (Eigen::Index j = 0; j < dr; j++) {
                CVec u = perturbed(basis.col(j), spec.delta);
                rho.block(j * da, j * da, da, da) = u * u.adjoint() / static_cast<double>(dr);
            }
            return with_bath(DenseState::from_matrix(std::move(rho)), shape.n_b);
        }
        case InitialFamily::CqProbe: {
            if (!probe) throw std::invalid_argument("cq-probe needs the channel fixed point and leading mode");
            if (shape.n_r != 1) throw std::invalid_argument("cq-probe uses a single reference qubit");
            auto da = Eigen::Index{1} << shape.n_a;
            if (probe->fixed_point.rows() != da || probe->mode.rows() != da) {
                throw std::invalid_argument("probe components do not match the system size");
            }
            double a_max = max_probe_mixing(*probe);
            double a = spec.mixing < 0 ? a_max : spec.mixing;
            if (a > a_max + 1e-6) throw std::invalid_argument("probe mixing outside the positivity window");
            return with_bath(DenseState::from_matrix(probe_density(*probe, a)), shape.n_b);
        }
        case InitialFamily::LateTimeConditional: {
            UnitarySequence &seq = need(preparation);
            DenseState s = with_bath(DenseState::from_vector(bell_vector(shape)), shape.n_b);
            for (size_t t = 1; t <= spec.t0; t++) {
                double p = run_step_forced(s, shape, seq.next(), Monitoring::monitored(), ResetKind::PureZero, t, 0);
                if (p < 1e-300) throw std::runtime_error("all-zero trajectory has vanishing weight");
            }
            return s;
        }
        case InitialFamily::LateTimeUnconditional: {
            UnitarySequence &seq = need(preparation);
            DenseState s = with_bath(DenseState::from_vector(bell_vector(shape)), shape.n_b);
            s.make_mixed();
            for (size_t t = 1; t <= spec.t0; t++) {
                run_step_forced(s, shape, seq.next(), Monitoring::unmonitored(), ResetKind::PureZero, t, 0);
            }
            return s;
        }
    }
    throw std::logic_error("unhandled initial family");
}

}  // namespace qmi
