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

#include "qmi/spectrum/channel_spectrum.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

#include <lapacke.h>

namespace qmi {

namespace {

// vec(K rho K^dagger) = (conj(K) (x) K) vec(rho) for column-major vec.
void add_kraus(CMat &superop, const CMat &k, double weight) {
    Eigen::Index d = k.rows();
    CMat kc = k.conjugate();
    for (Eigen::Index a = 0; a < d; a++) {
        for (Eigen::Index b = 0; b < d; b++) {
            cplx c = weight * kc(a, b);
            if (c == cplx(0)) continue;
            superop.block(a * d, b * d, d, d) += c * k;
        }
    }
}

CMat kraus(const CMat &u, Eigen::Index da, Eigen::Index db, Eigen::Index out, Eigen::Index in) {
    CMat k(da, da);
    for (Eigen::Index i = 0; i < da; i++) {
        for (Eigen::Index j = 0; j < da; j++) k(i, j) = u(i * db + out, j * db + in);
    }
    return k;
}

bool before(cplx x, cplx y) {
    double mx = std::abs(x), my = std::abs(y);
    if (std::abs(mx - my) > 1e-12) return mx > my;
    if (std::abs(x.real() - y.real()) > 1e-12) return x.real() > y.real();
    return x.imag() > y.imag();
}

lapack_complex_double *as_lapack(cplx *p) {
    return reinterpret_cast<lapack_complex_double *>(p);
}

CMat unvec(const CVec &v, Eigen::Index d) {
    return Eigen::Map<const CMat>(v.data(), d, d);
}

}  // namespace

CMat build_superoperator(const CMat &u, size_t n_a, size_t n_b, ResetKind reset) {
    auto da = Eigen::Index{1} << n_a;
    auto db = Eigen::Index{1} << n_b;
    if (u.rows() != da * db || u.cols() != da * db) throw std::invalid_argument("superoperator: unitary must act on A and B");
    if (reset == ResetKind::None) {
        Eigen::Index d = da * db;
        CMat s = CMat::Zero(d * d, d * d);
        add_kraus(s, u, 1.0);
        // Dephasing drops rows whose output indices disagree on the bath bits.
        for (Eigen::Index j = 0; j < d; j++) {
            for (Eigen::Index i = 0; i < d; i++) {
                if (i % db != j % db) s.row(i + d * j).setZero();
            }
        }
        return s;
    }
    CMat s = CMat::Zero(da * da, da * da);
    if (reset == ResetKind::PureZero) {
        for (Eigen::Index b = 0; b < db; b++) add_kraus(s, kraus(u, da, db, b, 0), 1.0);
    } else {
        for (Eigen::Index b = 0; b < db; b++) {
            for (Eigen::Index c = 0; c < db; c++) add_kraus(s, kraus(u, da, db, b, c), 1.0 / static_cast<double>(db));
        }
    }
    return s;
}

CMat apply_superoperator(const CMat &superop, const CMat &rho) {
    Eigen::Index d = rho.rows();
    if (superop.cols() != d * d) throw std::invalid_argument("superoperator size does not match the state");
    CVec v = Eigen::Map<const CVec>(rho.data(), d * d);
    CVec out = superop * v;
    return unvec(out, d);
}

double outlier_radius(size_t n_b) {
    return 1.3 / std::sqrt(std::ldexp(1.0, static_cast<int>(n_b)));
}

ChannelSpectrum spectrum_of(const CMat &superop) {
    if (superop.rows() != superop.cols()) throw std::invalid_argument("superoperator must be square");
    auto d = static_cast<Eigen::Index>(std::llround(std::sqrt(static_cast<double>(superop.rows()))));
    if (d * d != superop.rows()) throw std::invalid_argument("superoperator size must be a square");
    // LAPACK's zgeev is an order of magnitude faster than Eigen's solver here.
    auto n = superop.rows();
    CMat work = superop;
    CVec vals(n);
    CMat vecs(n, n);
    lapack_int info = LAPACKE_zgeev(
        LAPACK_COL_MAJOR, 'N', 'V', static_cast<lapack_int>(n), as_lapack(work.data()), static_cast<lapack_int>(n),
        as_lapack(vals.data()), nullptr, 1, as_lapack(vecs.data()), static_cast<lapack_int>(n));
    if (info != 0) throw std::runtime_error("eigensolver failed (zgeev info " + std::to_string(info) + ")");
    std::vector<Eigen::Index> order(static_cast<size_t>(vals.size()));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](Eigen::Index a, Eigen::Index b) { return before(vals(a), vals(b)); });

    // lambda0: the eigenvalue closest to 1.
    auto unit = *std::min_element(order.begin(), order.end(),
                                  [&](Eigen::Index a, Eigen::Index b) { return std::abs(vals(a) - 1.0) < std::abs(vals(b) - 1.0); });
    if (std::abs(vals(unit) - 1.0) > 1e-6) throw std::runtime_error("channel has no unit eigenvalue (not trace preserving)");

    ChannelSpectrum out;
    for (auto i : order) out.eigenvalues.push_back(vals(i));
    out.lambda0 = vals(unit);
    // Normalizing the trace first removes the eigensolver's arbitrary phase.
    CMat fix = unvec(vecs.col(unit), d);
    cplx tr = fix.trace();
    if (std::abs(tr) < 1e-12) throw std::runtime_error("fixed-point eigenvector has zero trace");
    fix /= tr;
    out.fixed_point = (fix + fix.adjoint()) / 2.0;

    std::vector<Eigen::Index> rest;
    for (auto i : order) {
        if (i != unit) rest.push_back(i);
    }
    if (rest.empty()) {
        out.lambda1 = 0;
        out.tau_eig = 0;
        return out;
    }
    Eigen::Index first = rest.front();
    out.lambda1 = vals(first);
    CMat mode = unvec(vecs.col(first), d);
    out.leading_mode = mode / mode.norm();
    double mod = std::abs(out.lambda1);
    if (mod >= 1 - 1e-12) {
        out.tau_eig = std::numeric_limits<double>::infinity();
    } else if (mod == 0) {
        out.tau_eig = 0;
    } else {
        out.tau_eig = -1 / std::log2(mod);
    }
    std::vector<double> mods;
    for (auto i : rest) mods.push_back(std::abs(vals(i)));
    std::nth_element(mods.begin(), mods.begin() + static_cast<std::ptrdiff_t>(mods.size() / 2), mods.end());
    out.bulk_radius = mods[mods.size() / 2];
    return out;
}

double fraction_outside(const ChannelSpectrum &spec, double radius) {
    if (spec.eigenvalues.size() <= 1) return 0;
    size_t outside = 0;
    bool skipped = false;
    for (cplx l : spec.eigenvalues) {
        if (!skipped && l == spec.lambda0) {
            skipped = true;
            continue;
        }
        if (std::abs(l) > radius) outside++;
    }
    return static_cast<double>(outside) / static_cast<double>(spec.eigenvalues.size() - 1);
}

ProbeComponents probe_components(const ChannelSpectrum &spec) {
    if (spec.leading_mode.size() == 0) throw std::invalid_argument("spectrum has no leading mode");
    return {spec.fixed_point, spec.leading_mode};
}

CMat probe_state(const ChannelSpectrum &spec, double a) {
    ProbeComponents p = probe_components(spec);
    double a_max = max_probe_mixing(p);
    if (a < 0 || a > a_max + 1e-6) throw std::invalid_argument("probe mixing outside the positivity window");
    return probe_density(p, a);
}

DecayFit fit_exponential_decay(const std::vector<double> &values) {
    if (values.size() < 2) throw std::invalid_argument("decay fit needs at least two points");
    size_t n = values.size();
    double st = 0, sy = 0, stt = 0, sty = 0;
    std::vector<double> y(n);
    for (size_t t = 0; t < n; t++) {
        if (!(values[t] > 0)) throw std::invalid_argument("decay fit needs positive values");
        y[t] = std::log(values[t]);
        double x = static_cast<double>(t);
        st += x;
        sy += y[t];
        stt += x * x;
        sty += x * y[t];
    }
    double nn = static_cast<double>(n);
    double rate = (nn * sty - st * sy) / (nn * stt - st * st);
    double intercept = (sy - rate * st) / nn;
    double ss_res = 0, ss_tot = 0, mean = sy / nn;
    for (size_t t = 0; t < n; t++) {
        double r = y[t] - intercept - rate * static_cast<double>(t);
        ss_res += r * r;
        ss_tot += (y[t] - mean) * (y[t] - mean);
    }
    return {std::exp(intercept), rate, ss_tot > 0 ? 1 - ss_res / ss_tot : 1.0};
}

ModulusFit fit_modulus(double rate, double reference_modulus) {
    if (!(reference_modulus > 0 && reference_modulus < 1)) throw std::invalid_argument("reference modulus must lie in (0, 1)");
    double ratio = rate / std::log(reference_modulus);
    int c = std::max(1, static_cast<int>(std::lround(ratio)));
    return {c, std::exp(rate / c)};
}

}  // namespace qmi
