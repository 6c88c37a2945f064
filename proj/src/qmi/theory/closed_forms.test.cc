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

#include "qmi/theory/closed_forms.h"

#include <gtest/gtest.h>

#include <cmath>
#include <stdexcept>

namespace qmi::theory {
namespace {

TEST(Thm1, StartsAtTwiceSystemSize) {
    EXPECT_DOUBLE_EQ(thm1_lower_bound(5, 1, 0, Form::Full), 10.0);
    EXPECT_DOUBLE_EQ(thm1_lower_bound(5, 1, 0, Form::Asymptotic), 10.0);
}

TEST(Thm1, AsymptoticOneStep) {
    EXPECT_NEAR(thm1_lower_bound(5, 1, 1, Form::Asymptotic), 10 - 2 * std::log2(1.5), 1e-12);
    EXPECT_NEAR(thm1_lower_bound(5, 1, 1, Form::Asymptotic), 8.8301, 5e-5);
}

TEST(Thm1, LargeBathIsUniversal) {
    for (int n_a : {4, 10, 30}) {
        EXPECT_NEAR(thm1_lower_bound(n_a, 60, 3, Form::Asymptotic), 2.0 * n_a - 4, 1e-12);
    }
}

// Direct product form of the averaged conditional purity, for modest sizes.
double thm1_naive(int n_a, int n_b, int t) {
    double da = std::ldexp(1.0, n_a);
    double db = std::ldexp(1.0, n_b);
    double x = 1 / da;
    double y = 1 / (da * db);
    double g = 0.5 * (std::pow(1 + x, t + 1) * std::pow(1 - y, t) - std::pow(1 - x, t + 1) * std::pow(1 + y, t));
    return -2 * std::log2(g);
}

TEST(Thm1, FullFormMatchesDirectProduct) {
    for (int n_a : {1, 3, 5}) {
        for (int n_b : {1, 2}) {
            for (int t : {0, 1, 2, 7, 30}) {
                EXPECT_NEAR(thm1_lower_bound(n_a, n_b, t, Form::Full), thm1_naive(n_a, n_b, t), 1e-9) << n_a << ' ' << n_b << ' ' << t;
            }
        }
    }
}

TEST(Thm1, FullFormStaysFiniteAtLargeDimension) {
    double v = thm1_lower_bound(200, 100, 1000, Form::Full);
    EXPECT_TRUE(std::isfinite(v));
    EXPECT_NEAR(v, 400 - 2 * std::log2(1001.0), 1e-9);
}

TEST(Thm1, Lifetime) {
    EXPECT_NEAR(thm1_lifetime(5, 1, 0.25), 2 * (std::exp2(3.75) - 1), 1e-9);
    EXPECT_NEAR(thm1_lifetime(5, 1, 0.25), 24.91, 5e-3);
    EXPECT_NEAR(thm1_lifetime(8, 60, 1 - 1e-12), 0.0, 1e-9);
    double ratio = thm1_lifetime(32, 2, 0.25) / thm1_lifetime(16, 2, 0.25);
    EXPECT_NEAR(ratio / std::exp2(0.75 * 16), 1.0, 1e-3);
    EXPECT_THROW(thm1_lifetime(5, 0, 0.25), std::invalid_argument);
    EXPECT_THROW(thm1_lifetime(5, 1, 1.5), std::invalid_argument);
}

TEST(Thm2, StartsAtTwiceReference) {
    EXPECT_NEAR(thm2_lower_bound(3, 6, 2, 0, Form::Full), 6.0, 1e-12);
    EXPECT_NEAR(thm2_lower_bound(3, 6, 2, 0, Form::Asymptotic), 6.0, 1e-12);
}

TEST(Thm2, RejectsReferenceLargerThanSystem) {
    EXPECT_THROW(thm2_lower_bound(5, 4, 1, 1, Form::Full), std::invalid_argument);
}

TEST(Thm2, FullFormEqualsThm1WhenReferenceIsWhole) {
    for (int t = 0; t <= 50; t++) {
        EXPECT_NEAR(thm2_lower_bound(6, 6, 2, t, Form::Full), thm1_lower_bound(6, 2, t, Form::Full), 1e-12);
    }
}

TEST(Thm2, AsymptoticReducesToThm1ForLargeSpaces) {
    for (int t = 0; t <= 100; t++) {
        EXPECT_NEAR(thm2_lower_bound(30, 30, 30, t, Form::Asymptotic), thm1_lower_bound(30, 30, t, Form::Asymptotic), 1e-6);
    }
}

TEST(Thm2, SmallReferencePlateaus) {
    double v = thm2_lower_bound(4, 20, 16, 1 << 14, Form::Asymptotic);
    EXPECT_GT(v, 7.0);
    EXPECT_LE(v, 8.0);
    EXPECT_GT(thm2_lower_bound(4, 20, 16, 1 << 14, Form::Full), 7.0);
}

TEST(Thm2, BoundedByTwiceReference) {
    for (int n_r = 1; n_r <= 5; n_r++) {
        for (int t = 0; t <= 40; t++) {
            EXPECT_LE(thm2_lower_bound(n_r, 5, 1, t, Form::Full), 2.0 * n_r + 1e-12);
        }
    }
}

TEST(Thm3, ExactStartsAtTwiceSystemSize) {
    for (int n_a : {1, 4, 10}) {
        EXPECT_DOUBLE_EQ(thm3_unconditioned(n_a, 2, 0, Form::Exact), 2.0 * n_a);
    }
}

TEST(Thm3, EarlyForm) {
    EXPECT_DOUBLE_EQ(thm3_unconditioned(32, 16, 2, Form::Early), 32.0);
}

// A small bath leaves a stationary excess purity of about log2(1 + 1/d_B)
// bits between the exact curve and the linear form.
TEST(Thm3, ExactTracksEarlyForm) {
    for (int t = 1; t <= 5; t++) {
        double exact = thm3_unconditioned(10, 2, t, Form::Exact);
        double early = thm3_unconditioned(10, 2, t, Form::Early);
        EXPECT_LT(std::abs(exact - early), std::log2(1.25)) << t;
    }
    for (int t = 1; t <= 5; t++) {
        double exact = thm3_unconditioned(40, 8, t, Form::Exact);
        double early = thm3_unconditioned(40, 8, t, Form::Early);
        EXPECT_LT(std::abs(exact - early) / early, 0.01) << t;
    }
}

TEST(Thm3, Lifetimes) {
    EXPECT_DOUBLE_EQ(thm3_lifetime(5, 1, 0.25, LifetimeRegime::Linear), 7.5);
    for (int n_a : {2, 9, 40}) {
        EXPECT_DOUBLE_EQ(thm3_lifetime(n_a, 1, 0.25, LifetimeRegime::Residual), 2.0);
    }
    EXPECT_NEAR(thm3_lifetime(5, 1, 1 - 1e-12, LifetimeRegime::Linear), 0.0, 1e-9);
    EXPECT_NEAR(thm3_lifetime(5, 1, 1 - 1e-12, LifetimeRegime::Residual), 0.0, 1e-9);
}

TEST(Thm4, StartsAtTwiceReference) {
    // The asymptotic form carries a 2^-(N_A+N_R) correction at t = 0.
    EXPECT_NEAR(thm4_transition(3, 8, 2, 0, Form::Asymptotic), 6.0, 1e-3);
    EXPECT_NEAR(thm4_transition(3, 40, 2, 0, Form::Asymptotic), 6.0, 1e-12);
    EXPECT_DOUBLE_EQ(thm4_transition(3, 8, 2, 0, Form::Piecewise), 6.0);
    EXPECT_NEAR(thm4_transition(3, 8, 2, 0, Form::Exact), 6.0, 1e-12);
}

TEST(Thm4, TransitionTimes) {
    EXPECT_DOUBLE_EQ(tau_minus(8, 64, 16), 3.5);
    EXPECT_DOUBLE_EQ(tau_plus(8, 64, 16), 4.5);
    EXPECT_DOUBLE_EQ(thm4_transition(8, 64, 16, 3, Form::Piecewise), 16.0);
    EXPECT_DOUBLE_EQ(thm4_transition(8, 64, 16, 4, Form::Piecewise), 8.0);
    EXPECT_DOUBLE_EQ(thm4_transition(8, 64, 16, 5, Form::Piecewise), 0.0);
    EXPECT_NEAR(thm4_transition(8, 64, 16, 3, Form::Asymptotic), 16.0, 0.01);
    EXPECT_NEAR(thm4_transition(8, 64, 16, 5, Form::Asymptotic), 0.0, 0.01);
}

TEST(Thm4, HalfOpenBoundaries) {
    // tau_- = 2 and tau_+ = 4 land on integers.
    EXPECT_DOUBLE_EQ(thm4_transition(2, 6, 2, 1, Form::Piecewise), 4.0);
    EXPECT_DOUBLE_EQ(thm4_transition(2, 6, 2, 2, Form::Piecewise), 4.0);
    EXPECT_DOUBLE_EQ(thm4_transition(2, 6, 2, 3, Form::Piecewise), 2.0);
    EXPECT_DOUBLE_EQ(thm4_transition(2, 6, 2, 4, Form::Piecewise), 0.0);
}

TEST(Thm4, WholeReferenceRecoversThm3Asymptotics) {
    for (int t = 0; t <= 200; t++) {
        double v = thm4_transition(40, 40, 4, t, Form::Asymptotic);
        double x = 80.0 - 4.0 * t;
        if (x >= 21) {
            EXPECT_NEAR(v, thm3_unconditioned(40, 4, t, Form::Early), 1e-6) << t;
        } else if (x <= -21) {
            // The late form is the leading term in natural units.
            EXPECT_NEAR(v * std::log(2.0) / thm3_unconditioned(40, 4, t, Form::Late), 1.0, 1e-6) << t;
        }
    }
}

TEST(Thm4, ExactMatchesThm3WhenReferenceIsWhole) {
    for (int t = 0; t <= 30; t++) {
        EXPECT_NEAR(thm4_transition(5, 5, 1, t, Form::Exact), thm3_unconditioned(5, 1, t, Form::Exact), 1e-12);
    }
}

TEST(Thm5, DirectEvaluation) {
    EXPECT_DOUBLE_EQ(thm5_partial(64, 16, 16, 4, 8, Form::Simplified), 94.0);
}

TEST(Thm5, NoErasureLimit) {
    for (int t = 0; t <= 200; t++) {
        double expect = 20 - 2 * std::log2(1.0 + t);
        EXPECT_NEAR(thm5_partial(10, 4, 2, 0, t, Form::Full), expect, 1e-12);
        EXPECT_NEAR(thm5_partial(10, 4, 2, 0, t, Form::Simplified), expect, 1e-12);
        EXPECT_NEAR(thm5_partial(10, 60, 2, 0, t, Form::Full), thm1_lower_bound(10, 60, t, Form::Asymptotic), 1e-6);
    }
}

TEST(Thm5, ErasingEveryStepRecoversThm3Early) {
    for (int t = 0; t <= 200; t++) {
        EXPECT_NEAR(thm5_partial(10, 3, 3, 1, t, Form::Simplified), thm3_unconditioned(10, 3, t, Form::Early), 1e-9) << t;
    }
}

TEST(Thm5, RejectsBadErasure) {
    EXPECT_THROW(thm5_partial(8, 2, 3, 2, 4, Form::Full), std::invalid_argument);
    EXPECT_THROW(thm5_partial(8, 2, 0, 2, 4, Form::Full), std::invalid_argument);
}

TEST(Thm5, Lifetime) {
    EXPECT_DOUBLE_EQ(thm5_lifetime(10, 2, 1, 0.25), 1.75 * 10 / 2);
    // Polynomial and exponential erasure periods.
    double poly = thm5_lifetime(16, 1, 16 * 16, 0.25);
    EXPECT_NEAR(poly, 256.0 * (28 - 8), 1e-9);
    double expo = thm5_lifetime(16, 1, size_t{1} << 16, 0.25);
    EXPECT_NEAR(expo, 65536.0 * 12, 1e-6);
}

TEST(Thm6, ZeroStepIsContinuityValue) {
    EXPECT_DOUBLE_EQ(thm6_no_reset(4, 1, 0), 8.0);
    auto p = evaluate(CurveKind::Thm6Exact, {-1, 4, 1, 0, 0}, 0);
    EXPECT_EQ(p.flag, PointFlag::Continuity);
}

TEST(Thm6, CloseToPureResetAtOneStep) {
    EXPECT_NEAR(thm6_no_reset(4, 1, 1), thm3_unconditioned(4, 1, 1, Form::Exact), 0.2);
}

TEST(Thm6, EarlyRegimeMatchesThm3) {
    for (int t = 1; t <= 4; t++) {
        EXPECT_NEAR(thm6_no_reset(60, 24, t), thm3_unconditioned(60, 24, t, Form::Early), 1e-6) << t;
    }
}

TEST(Thm6, LateRegimeMatchesLeadingTerm) {
    for (int t : {35, 40, 50}) {
        double nats = thm6_no_reset(10, 1, t) * std::log(2.0);
        EXPECT_NEAR(nats / thm3_unconditioned(10, 1, t, Form::Late), 1.0, 1e-3) << t;
    }
}

TEST(Thm7, EarlyForm) {
    EXPECT_DOUBLE_EQ(thm7_mixed_reset(4, 1, 1, Form::Early), 7.0);
    double slope = thm7_mixed_reset(10, 3, 5, Form::Early) - thm7_mixed_reset(10, 3, 4, Form::Early);
    EXPECT_DOUBLE_EQ(slope, 2 * (thm3_unconditioned(10, 3, 5, Form::Early) - thm3_unconditioned(10, 3, 4, Form::Early)));
}

TEST(Thm7, LateFormBelowOneAfterLifetime) {
    EXPECT_LT(thm7_mixed_reset(4, 1, 5, Form::Late), 1.0);
    EXPECT_LT(thm7_mixed_reset(6, 2, 4, Form::Late), 1.0);
}

TEST(Thm7, ExactStartsAtTwiceSystemSize) {
    EXPECT_DOUBLE_EQ(thm7_mixed_reset(4, 1, 0, Form::Exact), 8.0);
}

TEST(Thm7, Lifetimes) {
    EXPECT_DOUBLE_EQ(thm7_lifetime(4, 1, 0.25, LifetimeRegime::Linear), 0.75 * 4.5);
    EXPECT_DOUBLE_EQ(thm7_lifetime(4, 1, 0.25, LifetimeRegime::Residual), 1.0);
}

TEST(Curves, NamesRoundTrip) {
    for (auto kind : all_curve_kinds()) {
        EXPECT_EQ(parse_curve_kind(to_string(kind)), kind);
    }
    EXPECT_THROW(parse_curve_kind("thm9-exact"), std::invalid_argument);
}

TEST(Curves, NegativeValuesAreFlagged) {
    auto p = evaluate(CurveKind::Thm3Early, {-1, 2, 1, 0, 0}, 10);
    EXPECT_DOUBLE_EQ(p.bits, -6.0);
    EXPECT_EQ(p.flag, PointFlag::Negative);
}

TEST(Curves, MonotoneAfterFirstStep) {
    const CurveParams grid[] = {
        {-1, 4, 1, 1, 2},
        {-1, 6, 2, 2, 4},
        {2, 6, 2, 2, 4},
        {-1, 10, 3, 3, 8},
        {3, 12, 4, 4, 16},
    };
    for (const auto &p : grid) {
        for (auto kind : all_curve_kinds()) {
            auto curve = make_curve(kind, p, 120);
            for (size_t t = 2; t < curve.points.size(); t++) {
                EXPECT_LE(curve.points[t].bits, curve.points[t - 1].bits + 1e-9)
                    << to_string(kind) << " n_a=" << p.n_a << " n_b=" << p.n_b << " t=" << t;
            }
        }
    }
}

TEST(Curves, InitialValueIsPlateau) {
    for (auto kind : {CurveKind::Thm1Lb, CurveKind::Thm3Exact, CurveKind::Thm5Full, CurveKind::Thm6Exact, CurveKind::Thm7Exact}) {
        EXPECT_NEAR(evaluate(kind, {-1, 7, 2, 1, 3}, 0).bits, 14.0, 1e-12) << to_string(kind);
    }
}

}  // namespace
}  // namespace qmi::theory
