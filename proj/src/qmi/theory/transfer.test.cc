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

#include <gtest/gtest.h>

#include <cmath>

#include "qmi/theory/closed_forms.h"
#include "qmi/theory/purity.h"

namespace qmi::theory {
namespace {

constexpr Subsystem kRegions[] = {Subsystem::R, Subsystem::A, Subsystem::RA};

void expect_rel(long double got, long double want, long double tol, const char *what) {
    EXPECT_LE(std::abs(got - want), tol * std::abs(want)) << what << ": got " << static_cast<double>(got) << " want " << static_cast<double>(want);
}

TEST(Transfer, QIsSymmetricWithSumAndDifferenceEigenvalues) {
    for (long double m : {-1.0L, 0.0L, 1.0L, 2.5L}) {
        Mat2 q = q_matrix(m, 3, 2);
        EXPECT_EQ(q(0, 1), q(1, 0));
        long double nu_plus = q(0, 0) + q(0, 1);
        long double nu_minus = q(0, 0) - q(0, 1);
        // Eigenvectors (1, 1) and (1, -1).
        auto up = q * std::array<long double, 2>{1, 1};
        auto down = q * std::array<long double, 2>{1, -1};
        EXPECT_NEAR(static_cast<double>(up[0] - nu_plus), 0, 1e-15);
        EXPECT_NEAR(static_cast<double>(down[1] + nu_minus), 0, 1e-15);
        long double trace = q(0, 0) + q(1, 1);
        long double det = q(0, 0) * q(1, 1) - q(0, 1) * q(1, 0);
        EXPECT_NEAR(static_cast<double>(nu_plus + nu_minus - trace), 0, 1e-15);
        EXPECT_NEAR(static_cast<double>(nu_plus * nu_minus - det), 0, 1e-15);
    }
}

TEST(Transfer, ReplicaLimitOfQMatchesDirectConditionedPurity) {
    const long double da = 32, db = 2;
    for (size_t t = 0; t <= 100; t++) {
        long double tt = static_cast<long double>(t);
        long double direct = 0.5L * std::pow(da, -(2 * tt + 1)) * std::pow(db, -tt) *
                             (std::pow(da + 1, tt + 1) * std::pow(da * db - 1, tt) - std::pow(da - 1, tt + 1) * std::pow(da * db + 1, tt));
        expect_rel(transfer_purity(TransferVariant::Q, -1, {-1, 5, 1, 0, 0}, t, Subsystem::A), direct, 1e-12L, "Q");
    }
}

TEST(Transfer, NoResetStartsAtReferencePurity) {
    EXPECT_NEAR(static_cast<double>(transfer_purity(TransferVariant::M, -1, {-1, 4, 2, 0, 0}, 0, Subsystem::A)), 1.0 / 16, 1e-15);
    EXPECT_NEAR(static_cast<double>(transfer_purity(TransferVariant::M, -1, {-1, 4, 2, 0, 0}, 0, Subsystem::R)), 1.0 / 16, 1e-15);
}

TEST(Transfer, MatrixPowerMatchesRepeatedProduct) {
    Mat2 q = q_matrix(-1, 2, 1);
    Mat2 slow = Mat2::identity();
    for (int k = 0; k < 13; k++) slow = slow * q;
    Mat2 fast = mat_pow(q, 13);
    for (int i = 0; i < 4; i++) {
        EXPECT_NEAR(static_cast<double>(fast.a[i] / slow.a[i]), 1.0, 1e-15);
    }
}

// The closed forms and the matrix products are derived independently; at the
// replica limit they must agree to rounding.
TEST(Transfer, ReplicaLimitMatchesClosedForms) {
    struct Case {
        TransferVariant variant;
        size_t t_min;
    };
    const Case cases[] = {
        {TransferVariant::Q, 0},
        {TransferVariant::PureReset, 0},
        {TransferVariant::M, 1},
        {TransferVariant::MixedReset, 1},
    };
    for (const auto &c : cases) {
        for (int n_a = 1; n_a <= 10; n_a++) {
            for (int n_b = 1; n_b <= 4; n_b++) {
                PurityShape shape{-1, n_a, n_b, 0, 0};
                for (size_t t = c.t_min; t <= 100; t++) {
                    for (auto region : kRegions) {
                        long double got = transfer_purity(c.variant, -1, shape, t, region);
                        long double want = closed_form_purity(dynamics_of(c.variant), shape, t, region);
                        ASSERT_LE(std::abs(got - want), 1e-12L * std::abs(want))
                            << "variant " << static_cast<int>(c.variant) << " n_a=" << n_a << " n_b=" << n_b << " t=" << t
                            << " region " << static_cast<int>(region);
                    }
                }
            }
        }
    }
}

TEST(Transfer, PureResetWithSmallReference) {
    for (int n_r = 1; n_r <= 6; n_r++) {
        PurityShape shape{n_r, 6, 2, 0, 0};
        for (size_t t = 0; t <= 60; t++) {
            for (auto region : kRegions) {
                expect_rel(transfer_purity(TransferVariant::PureReset, -1, shape, t, region),
                           closed_form_purity(Dynamics::PureReset, shape, t, region), 1e-12L, "pure reset");
            }
        }
    }
}

TEST(Transfer, GlobalPartialMatrixMatchesClosedForm) {
    for (int n_a = 1; n_a <= 10; n_a++) {
        for (int n_b = 1; n_b <= 4; n_b++) {
            for (int n_e = 1; n_e <= n_b; n_e++) {
                for (size_t s : {size_t{0}, size_t{1}, size_t{3}, size_t{7}}) {
                    PurityShape shape{-1, n_a, n_b, n_e, s};
                    for (size_t t = 0; t <= 100; t++) {
                        for (auto region : kRegions) {
                            long double got = transfer_purity(TransferVariant::Lambda, -1, shape, t, region);
                            long double want = closed_form_purity(Dynamics::Partial, shape, t, region);
                            ASSERT_LE(std::abs(got - want), 1e-12L * std::abs(want)) << n_a << ' ' << n_b << ' ' << n_e << ' ' << s << ' ' << t;
                        }
                    }
                }
            }
        }
    }
}

// The global matrix keeps only the leading order in 1/d_A of the exact
// period product, so the two approach each other as the system grows.
TEST(Transfer, ExactPartialProductApproachesGlobalMatrix) {
    double previous = 1;
    for (int n_a : {4, 8, 12, 16}) {
        PurityShape shape{-1, n_a, 3, 2, 4};
        long double exact = transfer_purity(TransferVariant::QPrime, -1, shape, 20, Subsystem::RA);
        long double global = transfer_purity(TransferVariant::Lambda, -1, shape, 20, Subsystem::RA);
        double gap = static_cast<double>(std::abs(exact - global) / global);
        EXPECT_LT(gap, previous);
        previous = gap;
    }
    EXPECT_LT(previous, 1e-3);
}

TEST(Transfer, QPrimeWithFullErasureAndNoMeasurementLeftIsSingular) {
    EXPECT_THROW(q_prime_matrix(-1, 3, 2, 3), std::invalid_argument);
}

TEST(Transfer, ConditionedPurityGivesThm1) {
    for (size_t t = 0; t <= 40; t++) {
        long double g = transfer_purity(TransferVariant::Q, -1, {-1, 6, 2, 0, 0}, t, Subsystem::A);
        EXPECT_NEAR(static_cast<double>(-2 * std::log2(g)), thm1_lower_bound(6, 2, t, Form::Full), 1e-10);
    }
}

}  // namespace
}  // namespace qmi::theory
