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

#include "qmi/theory/purity.h"

#include <cmath>
#include <stdexcept>

namespace qmi::theory {

long double pow2(long double exponent) {
    return std::exp2(exponent);
}

namespace {

void require_equal_reference(const PurityShape &shape) {
    if (shape.ref() != shape.n_a) {
        throw std::invalid_argument("this dynamics is only solved for N_R = N_A");
    }
}

long double conditioned(const PurityShape &shape, size_t t, Subsystem region) {
    if (region == Subsystem::RA) {
        return 1;  // the conditional state of R and A is pure
    }
    long double da = pow2(shape.n_a);
    long double db = pow2(shape.n_b);
    long double dr = pow2(shape.ref());
    long double tt = static_cast<long double>(t);
    long double nu_plus = (da + 1) * (da * db - 1) / (da * da * db);
    long double nu_minus = (da - 1) * (da * db + 1) / (da * da * db);
    return ((1 + dr) * std::pow(nu_plus, tt) + (1 - dr) * std::pow(nu_minus, tt)) / (2 * dr);
}

long double pure_reset(const PurityShape &shape, size_t t, Subsystem region) {
    long double da = pow2(shape.n_a);
    long double db = pow2(shape.n_b);
    long double dr = pow2(shape.ref());
    long double rt = std::pow(db * (da * da - 1) / (da * da * db * db - 1), static_cast<long double>(t));
    long double k = da * (db + 1) / (da * da * db + 1);
    switch (region) {
        case Subsystem::R:
            return 1 / dr;
        case Subsystem::A: {
            // 1/d_R - K written without cancelling the leading terms.
            long double gap = (da * db * (da - dr) + (1 - dr * da)) / (dr * (da * da * db + 1));
            return k + gap * rt;
        }
        case Subsystem::RA:
            return k / dr + (1 - k / dr) * rt;
    }
    return 0;
}

long double no_reset(const PurityShape &shape, size_t t, Subsystem region) {
    require_equal_reference(shape);
    long double da = pow2(shape.n_a);
    long double db = pow2(shape.n_b);
    long double w = std::pow((da * da * db - 1) / (da * da * db * db - 1), static_cast<long double>(t));
    switch (region) {
        case Subsystem::R:
            return 1 / da;
        case Subsystem::A:
            return (da * da - 1) * (db - 1) / (da * (da * da * db - 1)) * w + 1 / da;
        case Subsystem::RA:
            return (da * da - 1) / (da * da) * w + 1 / (da * da);
    }
    return 0;
}

long double mixed_reset(const PurityShape &shape, size_t t, Subsystem region) {
    require_equal_reference(shape);
    long double da = pow2(shape.n_a);
    long double db = pow2(shape.n_b);
    long double v = std::pow((da * da - 1) / (da * da * db * db - 1), static_cast<long double>(t));
    switch (region) {
        case Subsystem::R:
            return 1 / da;
        case Subsystem::A:
            return (db - 1) / da * v + 1 / da;
        case Subsystem::RA:
            return (db - 1 / (da * da)) * v + 1 / (da * da);
    }
    return 0;
}

long double partial(const PurityShape &shape, size_t t, Subsystem region) {
    require_equal_reference(shape);
    long double da = pow2(shape.n_a);
    long double de = pow2(shape.n_e);
    size_t ns = shape.s == 0 ? 0 : t / shape.s;
    long double s = static_cast<long double>(shape.s);
    long double rest = static_cast<long double>(t - shape.s * ns);
    long double decay = pow2(-static_cast<long double>(shape.n_e) * static_cast<long double>(ns));
    // Geometric sums over past erasures; they vanish when nothing was erased.
    long double geo = ns == 0 ? 0 : s * (1 - decay) / (de - 1);
    switch (region) {
        case Subsystem::R:
            return (geo + rest + 1) / da;
        case Subsystem::A:
            return (geo * de + (rest + 1) * decay) / da;
        case Subsystem::RA:
            return decay + (geo * de + rest * decay) / (da * da);
    }
    return 0;
}

}  // namespace

long double closed_form_purity(Dynamics dynamics, const PurityShape &shape, size_t t, Subsystem region) {
    if (shape.n_a < 1 || shape.n_b < 0 || shape.ref() < 0 || shape.ref() > shape.n_a) {
        throw std::invalid_argument("purity: invalid shape");
    }
    switch (dynamics) {
        case Dynamics::Conditioned:
            return conditioned(shape, t, region);
        case Dynamics::PureReset:
            return pure_reset(shape, t, region);
        case Dynamics::NoReset:
            return no_reset(shape, t, region);
        case Dynamics::MixedReset:
            return mixed_reset(shape, t, region);
        case Dynamics::Partial:
            if (shape.s != 0 && (shape.n_e < 1 || shape.n_e > shape.n_b)) {
                throw std::invalid_argument("purity: erasure needs 1 <= N_E <= N_B");
            }
            return partial(shape, t, region);
    }
    return 0;
}

}  // namespace qmi::theory
