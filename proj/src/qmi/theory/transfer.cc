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

#include "qmi/theory/transfer.h"

#include <cmath>
#include <stdexcept>

namespace qmi::theory {

Mat2 Mat2::operator*(const Mat2 &o) const {
    const auto &x = a;
    const auto &y = o.a;
    return {{x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3], x[2] * y[0] + x[3] * y[2], x[2] * y[1] + x[3] * y[3]}};
}

std::array<long double, 2> Mat2::operator*(const std::array<long double, 2> &v) const {
    return {a[0] * v[0] + a[1] * v[1], a[2] * v[0] + a[3] * v[1]};
}

Mat2 mat_pow(Mat2 m, size_t k) {
    Mat2 out = Mat2::identity();
    while (k) {
        if (k & 1) out = out * m;
        m = m * m;
        k >>= 1;
    }
    return out;
}

namespace {

long double dim(int n) {
    return pow2(n);
}

long double dot(const std::array<long double, 2> &a, const std::array<long double, 2> &b) {
    return a[0] * b[0] + a[1] * b[1];
}

constexpr std::array<long double, 2> kSwap{1, 0};
constexpr std::array<long double, 2> kIdentity{0, 1};

// Overlaps of the final boundary (swap or identity on d copies of a
// d-dimensional system) with the two basis states, at replica index m.
std::array<long double, 2> swap_row(long double d, long double m) {
    return {std::pow(d, m + 2), std::pow(d, m + 1)};
}
std::array<long double, 2> identity_row(long double d, long double m) {
    return {std::pow(d, m + 1), std::pow(d, m + 2)};
}

void require_equal_reference(const PurityShape &shape) {
    if (shape.ref() != shape.n_a) {
        throw std::invalid_argument("transfer: this variant is only solved for N_R = N_A");
    }
}

long double conditioned(long double m, const PurityShape &shape, size_t t, Subsystem region) {
    if (region == Subsystem::RA) {
        return 1;
    }
    long double dr = dim(shape.ref());
    auto v = mat_pow(q_matrix(m, shape.n_a, shape.n_b), t) * kSwap;
    // Only the reference block carries the Bell boundary; idle system qubits
    // start in |0> and contribute unit overlaps.
    return std::pow(dr, -(m + 2)) * dot(identity_row(dr, m), v);
}

long double partial_product(TransferVariant variant, long double m, const PurityShape &shape, size_t t, Subsystem region) {
    require_equal_reference(shape);
    long double da = dim(shape.n_a);
    Mat2 total;
    if (variant == TransferVariant::Lambda) {
        total = partial_global_matrix(m, shape.n_a, shape.n_b, shape.n_e, shape.s, t);
    } else {
        Mat2 q = q_matrix(m, shape.n_a, shape.n_b);
        size_t ns = shape.s == 0 ? 0 : t / shape.s;
        Mat2 period = shape.s == 0 ? Mat2::identity() : q_prime_matrix(m, shape.n_a, shape.n_b, shape.n_e) * mat_pow(q, shape.s - 1);
        total = mat_pow(q, t - shape.s * ns) * mat_pow(period, ns);
    }
    long double pre = std::pow(da, -(m + 2));
    switch (region) {
        case Subsystem::R:
            return pre * dot(swap_row(da, m), total * kIdentity);
        case Subsystem::A:
            return pre * dot(identity_row(da, m), total * kSwap);
        case Subsystem::RA:
            return pre * dot(swap_row(da, m), total * kSwap);
    }
    return 0;
}

long double unconditioned(TransferVariant variant, const PurityShape &shape, size_t t, Subsystem region) {
    long double da = dim(shape.n_a);
    long double dr = dim(shape.ref());
    auto top = region == Subsystem::R ? kIdentity : kSwap;
    std::array<long double, 2> v = top;
    long double pre = 1;
    std::array<long double, 2> boundary{};
    switch (variant) {
        case TransferVariant::PureReset:
            v = mat_pow(pure_reset_matrix(shape.n_a, shape.n_b), t) * top;
            // Overlaps of the Bell block with the start state, divided by d_R^2.
            boundary = region == Subsystem::A ? std::array<long double, 2>{1 / dr, 1} : std::array<long double, 2>{1, 1 / dr};
            return dot(boundary, v);
        case TransferVariant::M:
            require_equal_reference(shape);
            if (region != Subsystem::R && t > 0) {
                long double db = dim(shape.n_b);
                long double d2 = da * da * db * db - 1;
                std::array<long double, 2> first{db * (da * da - 1) / d2, da * (db * db - 1) / d2};
                v = mat_pow(no_reset_matrix(shape.n_a, shape.n_b), t - 1) * first;
            }
            break;
        case TransferVariant::MixedReset:
            require_equal_reference(shape);
            if (t > 0) {
                v = mixed_reset_matrix(shape.n_a, shape.n_b, true) * (mat_pow(mixed_reset_matrix(shape.n_a, shape.n_b, false), t - 1) * top);
            }
            break;
        default:
            throw std::logic_error("transfer: not an unconditioned variant");
    }
    pre = 1 / (da * da);
    boundary = region == Subsystem::A ? std::array<long double, 2>{da, da * da} : std::array<long double, 2>{da * da, da};
    return pre * dot(boundary, v);
}

}  // namespace

Mat2 q_matrix(long double m, int n_a, int n_b) {
    long double da = dim(n_a);
    long double db = dim(n_b);
    long double scale = std::pow(db, -(m + 1));
    long double q_tau = scale * (1 - 1 / (da * da * db));
    long double q_e = scale * (1 - 1 / db) / da;
    return {{q_tau, q_e, q_e, q_tau}};
}

Mat2 q_prime_matrix(long double m, int n_a, int n_b, int n_e) {
    if (n_e < 1 || n_e > n_b) {
        throw std::invalid_argument("erasure needs 1 <= N_E <= N_B");
    }
    long double da = dim(n_a);
    long double de = dim(n_e);
    long double dk = dim(n_b - n_e);  // bath qubits still measured
    long double dae = da * de;
    long double scale = std::pow(dk, -(m + 1));
    return {{scale * (1 - 1 / (da * da * dk)) / de, scale * (1 - 1 / dk) / dae, scale * (1 - 1 / (de * de * dk)) / da, scale * (1 - 1 / (dae * dae * dk))}};
}

Mat2 partial_global_matrix(long double m, int n_a, int n_b, int n_e, size_t s, size_t t) {
    long double da = dim(n_a);
    long double de = dim(n_e);
    size_t ns = s == 0 ? 0 : t / s;
    long double ss = static_cast<long double>(s);
    long double rest = static_cast<long double>(t - s * ns);
    long double decay = pow2(-static_cast<long double>(n_e) * static_cast<long double>(ns));
    long double geo = ns == 0 ? 0 : ss * (1 - decay) / (de - 1);
    long double scale = std::pow(dim(n_b), -(m + 1) * static_cast<long double>(t));
    return {{scale * decay, scale * (geo + rest) / da, scale * (geo * de + rest * decay) / da, scale}};
}

Mat2 no_reset_matrix(int n_a, int n_b) {
    long double da = dim(n_a);
    long double db = dim(n_b);
    long double d2 = da * da * db * db - 1;
    return {{(da * da * db - 1) / d2, 0, da * (db - 1) / d2, 1}};
}

Mat2 pure_reset_matrix(int n_a, int n_b) {
    long double da = dim(n_a);
    long double db = dim(n_b);
    long double d2 = da * da * db * db - 1;
    return {{(da * da - 1) * db / d2, 0, da * (db * db - 1) / d2, 1}};
}

Mat2 mixed_reset_matrix(int n_a, int n_b, bool first_step) {
    long double da = dim(n_a);
    long double db = dim(n_b);
    long double d2 = da * da * db * db - 1;
    // A maximally mixed bath input weighs the swap sector by 1/d_B.
    long double keep = (da * da - 1) * (first_step ? db : 1) / d2;
    return {{keep, 0, da * (db * db - 1) / d2, 1}};
}

long double transfer_purity(TransferVariant variant, long double m, const PurityShape &shape, size_t t, Subsystem region) {
    if (shape.n_a < 1 || shape.n_b < 0 || shape.ref() < 0 || shape.ref() > shape.n_a) {
        throw std::invalid_argument("transfer: invalid shape");
    }
    switch (variant) {
        case TransferVariant::Q:
            return conditioned(m, shape, t, region);
        case TransferVariant::QPrime:
        case TransferVariant::Lambda:
            return partial_product(variant, m, shape, t, region);
        default:
            return unconditioned(variant, shape, t, region);
    }
}

Dynamics dynamics_of(TransferVariant variant) {
    switch (variant) {
        case TransferVariant::Q:
            return Dynamics::Conditioned;
        case TransferVariant::QPrime:
        case TransferVariant::Lambda:
            return Dynamics::Partial;
        case TransferVariant::M:
            return Dynamics::NoReset;
        case TransferVariant::PureReset:
            return Dynamics::PureReset;
        case TransferVariant::MixedReset:
            return Dynamics::MixedReset;
    }
    return Dynamics::Conditioned;
}

}  // namespace qmi::theory
