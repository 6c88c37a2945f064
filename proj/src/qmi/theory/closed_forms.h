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

#ifndef QMI_THEORY_CLOSED_FORMS_H
#define QMI_THEORY_CLOSED_FORMS_H

#include <cstddef>
#include <string_view>
#include <vector>

// Haar-averaged mutual-information curves, all in bits. Dimensions are
// d_X = 2^{N_X}; internal arithmetic is long double so that systems of a few
// hundred qubits stay finite.
namespace qmi::theory {

enum class Form { Full, Asymptotic, Simplified, Exact, Early, Late, Piecewise };

// Conditioned QMI with reset, Bell start with N_R = N_A.
double thm1_lower_bound(int n_a, int n_b, size_t t, Form form);
double thm1_lifetime(int n_a, int n_b, double epsilon);

// Conditioned QMI with N_R <= N_A Bell pairs.
double thm2_lower_bound(int n_r, int n_a, int n_b, size_t t, Form form);

// Unconditioned Renyi-2 QMI with pure reset, N_R = N_A.
double thm3_unconditioned(int n_a, int n_b, size_t t, Form form);
enum class LifetimeRegime { Linear, Residual };
double thm3_lifetime(int n_a, int n_b, double epsilon, LifetimeRegime regime);

// Unconditioned QMI with N_R <= N_A: the full expression (Form::Exact), the
// large-dimension form and the three-regime piecewise form.
double thm4_transition(int n_r, int n_a, int n_b, size_t t, Form form);
double tau_minus(int n_r, int n_a, int n_b);
double tau_plus(int n_r, int n_a, int n_b);

// Conditioned QMI with an erasure of N_E bath qubits every s steps
// (s = 0 means never).
double thm5_partial(int n_a, int n_b, int n_e, size_t s, size_t t, Form form);
double thm5_lifetime(int n_a, int n_e, size_t s, double epsilon);

// Unconditioned QMI when the bath is measured but never reset. The formula
// holds for t >= 1; t = 0 returns 2 N_A.
double thm6_no_reset(int n_a, int n_b, size_t t);

// Unconditioned QMI when the bath is reset to the maximally mixed state.
double thm7_mixed_reset(int n_a, int n_b, size_t t, Form form);
double thm7_lifetime(int n_a, int n_b, double epsilon, LifetimeRegime regime);

// Named curves for the CLI, the harness and the plots.
enum class CurveKind {
    Thm1Lb,
    Thm1Asymptotic,
    Thm2Lb,
    Thm2Asymptotic,
    Thm3Exact,
    Thm3Early,
    Thm3Late,
    Thm4Exact,
    Thm4Asymptotic,
    Thm4Piecewise,
    Thm5Full,
    Thm5Simplified,
    Thm6Exact,
    Thm7Exact,
    Thm7Early,
    Thm7Late,
};

CurveKind parse_curve_kind(std::string_view name);
std::string_view to_string(CurveKind kind);
std::vector<CurveKind> all_curve_kinds();

struct CurveParams {
    int n_r = -1;  // negative: same as n_a
    int n_a = 0;
    int n_b = 0;
    int n_e = 0;
    size_t s = 0;  // erasure period, 0 = never
};

enum class PointFlag {
    Ok,
    Negative,    // the expression left its physical range
    Continuity,  // value fixed by convention outside the formula's domain
};

struct TheoryPoint {
    size_t t = 0;
    double bits = 0;
    PointFlag flag = PointFlag::Ok;
};

struct TheoryCurve {
    CurveKind kind{};
    CurveParams params;
    std::vector<TheoryPoint> points;
};

TheoryPoint evaluate(CurveKind kind, const CurveParams &params, size_t t);
TheoryCurve make_curve(CurveKind kind, const CurveParams &params, size_t t_max);

std::string_view to_string(PointFlag flag);

}  // namespace qmi::theory

#endif
