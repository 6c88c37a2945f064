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

#include <cmath>
#include <stdexcept>
#include <string>

#include "qmi/theory/purity.h"

namespace qmi::theory {

namespace {

using ld = long double;

const ld kLn2 = std::log(2.0L);

void require(bool ok, const char *what) {
    if (!ok) throw std::invalid_argument(what);
}

void require_epsilon(double epsilon) {
    require(epsilon > 0 && epsilon < 1, "epsilon must lie in (0, 1)");
}

// log2(1 + 2^x) without overflow.
ld log2_one_plus_pow2(ld x) {
    if (x > 0) return x + std::log1p(std::exp2(-x)) / kLn2;
    return std::log1p(std::exp2(x)) / kLn2;
}

// log2 of (1/2)[(1+r)(1+x)^a (1-y)^b - (1-r)(1-x)^a (1+y)^b], the averaged
// conditional purity, evaluated through log1p/expm1 so that dimensions far
// beyond 2^64 keep full relative precision.
ld log2_conditioned_purity(ld r, ld x, ld y, ld a, ld b) {
    ld lp = a * std::log1p(x) + b * std::log1p(-y);
    ld lm = a * std::log1p(-x) + b * std::log1p(y);
    ld inner = (1 + r) * std::expm1(lp - lm) + 2 * r;
    return -1 + lm / kLn2 + std::log2(inner);
}

ld qmi_from_purities(Dynamics dyn, const PurityShape &shape, size_t t) {
    ld pr = closed_form_purity(dyn, shape, t, Subsystem::R);
    ld pa = closed_form_purity(dyn, shape, t, Subsystem::A);
    ld pra = closed_form_purity(dyn, shape, t, Subsystem::RA);
    return -std::log2(pr) - std::log2(pa) + std::log2(pra);
}

}  // namespace

double thm1_lower_bound(int n_a, int n_b, size_t t, Form form) {
    require(n_a >= 1 && n_b >= 1, "thm1 needs N_A >= 1 and N_B >= 1");
    ld tt = static_cast<ld>(t);
    if (form == Form::Asymptotic || form == Form::Simplified) {
        ld rate = -std::expm1(-static_cast<ld>(n_b) * kLn2);  // 1 - 1/d_B
        return static_cast<double>(2 * static_cast<ld>(n_a) - 2 * std::log2(rate * tt + 1));
    }
    require(form == Form::Full, "thm1 forms: full, asymptotic");
    ld x = pow2(-n_a);
    ld y = pow2(-(n_a + n_b));
    return static_cast<double>(-2 * log2_conditioned_purity(x, x, y, tt, tt));
}

double thm1_lifetime(int n_a, int n_b, double epsilon) {
    require(n_b >= 1, "thm1 lifetime needs N_B >= 1");
    require_epsilon(epsilon);
    ld db = pow2(n_b);
    return static_cast<double>(db / (db - 1) * std::expm1((1 - static_cast<ld>(epsilon)) * n_a * kLn2));
}

double thm2_lower_bound(int n_r, int n_a, int n_b, size_t t, Form form) {
    require(n_r >= 1 && n_r <= n_a && n_b >= 1, "thm2 needs 1 <= N_R <= N_A and N_B >= 1");
    ld tt = static_cast<ld>(t);
    if (form == Form::Asymptotic || form == Form::Simplified) {
        ld dr = pow2(n_r);
        ld db = pow2(n_b);
        ld ratio = pow2(n_r - n_a);
        ld inner = 1 - (dr + 1) / (dr * db) + 1 / (2 * dr);
        return static_cast<double>(2 * static_cast<ld>(n_r) - 2 * std::log2(1 + ratio * tt * inner));
    }
    require(form == Form::Full, "thm2 forms: full, asymptotic");
    ld r = pow2(-n_r);
    ld x = pow2(-n_a);
    ld y = pow2(-(n_a + n_b));
    return static_cast<double>(-2 * log2_conditioned_purity(r, x, y, tt, tt));
}

double thm3_unconditioned(int n_a, int n_b, size_t t, Form form) {
    require(n_a >= 1 && n_b >= 0, "thm3 needs N_A >= 1");
    switch (form) {
        case Form::Exact:
        case Form::Full:
            return static_cast<double>(qmi_from_purities(Dynamics::PureReset, {n_a, n_a, n_b, 0, 0}, t));
        case Form::Early:
            return 2.0 * n_a - static_cast<double>(t) * n_b;
        case Form::Late:
            return static_cast<double>(pow2(2 * static_cast<ld>(n_a) - static_cast<ld>(n_b) * static_cast<ld>(t)));
        default:
            throw std::invalid_argument("thm3 forms: exact, early, late");
    }
}

double thm3_lifetime(int n_a, int n_b, double epsilon, LifetimeRegime regime) {
    require(n_b >= 1, "thm3 lifetime needs N_B >= 1");
    require_epsilon(epsilon);
    if (regime == LifetimeRegime::Linear) {
        return 2 * (1 - epsilon) * n_a / n_b;
    }
    return std::log2(1 / epsilon) / n_b;
}

double tau_minus(int n_r, int n_a, int n_b) {
    return static_cast<double>(n_a - n_r) / n_b;
}

double tau_plus(int n_r, int n_a, int n_b) {
    return static_cast<double>(n_a + n_r) / n_b;
}

double thm4_transition(int n_r, int n_a, int n_b, size_t t, Form form) {
    require(n_r >= 1 && n_r <= n_a && n_b >= 1, "thm4 needs 1 <= N_R <= N_A and N_B >= 1");
    ld tt = static_cast<ld>(t);
    switch (form) {
        case Form::Exact:
        case Form::Full:
            return static_cast<double>(qmi_from_purities(Dynamics::PureReset, {n_r, n_a, n_b, 0, 0}, t));
        case Form::Asymptotic: {
            ld decay = static_cast<ld>(n_b) * tt;
            ld first = log2_one_plus_pow2(n_r + n_a - decay);
            ld second = std::log1p(std::expm1((n_a - n_r) * kLn2) * pow2(-decay)) / kLn2;
            return static_cast<double>(first - second);
        }
        case Form::Piecewise: {
            double lo = tau_minus(n_r, n_a, n_b);
            double hi = tau_plus(n_r, n_a, n_b);
            double td = static_cast<double>(t);
            if (td < lo) return 2.0 * n_r;
            if (td < hi) return n_a + n_r - n_b * td;
            return 0.0;
        }
        default:
            throw std::invalid_argument("thm4 forms: exact, asymptotic, piecewise");
    }
}

double thm5_partial(int n_a, int n_b, int n_e, size_t s, size_t t, Form form) {
    require(n_a >= 1 && n_b >= 1, "thm5 needs N_A >= 1 and N_B >= 1");
    require(s == 0 || (n_e >= 1 && n_e <= n_b), "thm5 needs 1 <= N_E <= N_B");
    size_t ns = s == 0 ? 0 : t / s;
    ld rest = static_cast<ld>(t - s * ns);
    ld base = 2 * static_cast<ld>(n_a) - static_cast<ld>(ns) * n_e;
    if (form == Form::Simplified || form == Form::Asymptotic) {
        if (ns == 0) {
            // Before the first erasure the log s term has not yet appeared;
            // the full expression gives 2 log2(1 + t) there.
            return static_cast<double>(base - 2 * std::log2(1 + rest));
        }
        return static_cast<double>(base - std::log2(1 + rest) - std::log2(static_cast<ld>(s)));
    }
    require(form == Form::Full, "thm5 forms: full, simplified");
    ld de = pow2(n_e);
    ld decay = pow2(-static_cast<ld>(n_e) * static_cast<ld>(ns));
    ld geo = ns == 0 ? 0 : static_cast<ld>(s) * (1 - decay) / (de - 1);
    return static_cast<double>(base - std::log2(geo + rest + 1) - std::log2(geo * de + (rest + 1) * decay));
}

double thm5_lifetime(int n_a, int n_e, size_t s, double epsilon) {
    require(n_e >= 1 && s >= 1, "thm5 lifetime needs N_E >= 1 and s >= 1");
    require_epsilon(epsilon);
    double sd = static_cast<double>(s);
    return sd * ((2 - epsilon) * n_a - std::log2(sd)) / n_e;
}

double thm6_no_reset(int n_a, int n_b, size_t t) {
    require(n_a >= 1 && n_b >= 1, "thm6 needs N_A >= 1 and N_B >= 1");
    if (t == 0) {
        return 2.0 * n_a;
    }
    return static_cast<double>(qmi_from_purities(Dynamics::NoReset, {n_a, n_a, n_b, 0, 0}, t));
}

double thm7_mixed_reset(int n_a, int n_b, size_t t, Form form) {
    require(n_a >= 1 && n_b >= 1, "thm7 needs N_A >= 1 and N_B >= 1");
    ld tt = static_cast<ld>(t);
    switch (form) {
        case Form::Exact:
        case Form::Full:
            if (t == 0) return 2.0 * n_a;
            return static_cast<double>(qmi_from_purities(Dynamics::MixedReset, {n_a, n_a, n_b, 0, 0}, t));
        case Form::Early:
            return static_cast<double>(2 * static_cast<ld>(n_a) + n_b - 2 * static_cast<ld>(n_b) * tt);
        case Form::Late:
            return static_cast<double>(pow2(2 * static_cast<ld>(n_a) + static_cast<ld>(n_b) * (1 - 2 * tt)));
        default:
            throw std::invalid_argument("thm7 forms: exact, early, late");
    }
}

double thm7_lifetime(int n_a, int n_b, double epsilon, LifetimeRegime regime) {
    require(n_b >= 1, "thm7 lifetime needs N_B >= 1");
    require_epsilon(epsilon);
    if (regime == LifetimeRegime::Linear) {
        return (1 - epsilon) * (static_cast<double>(n_a) / n_b + 0.5);
    }
    return std::log2(1 / epsilon) / (2.0 * n_b);
}

namespace {

struct KindName {
    CurveKind kind;
    std::string_view name;
};

constexpr KindName kKinds[] = {
    {CurveKind::Thm1Lb, "thm1-lb"},
    {CurveKind::Thm1Asymptotic, "thm1-asymptotic"},
    {CurveKind::Thm2Lb, "thm2-lb"},
    {CurveKind::Thm2Asymptotic, "thm2-asymptotic"},
    {CurveKind::Thm3Exact, "thm3-exact"},
    {CurveKind::Thm3Early, "thm3-early"},
    {CurveKind::Thm3Late, "thm3-late"},
    {CurveKind::Thm4Exact, "thm4-exact"},
    {CurveKind::Thm4Asymptotic, "thm4-asymptotic"},
    {CurveKind::Thm4Piecewise, "thm4-piecewise"},
    {CurveKind::Thm5Full, "thm5-full"},
    {CurveKind::Thm5Simplified, "thm5-simplified"},
    {CurveKind::Thm6Exact, "thm6-exact"},
    {CurveKind::Thm7Exact, "thm7-exact"},
    {CurveKind::Thm7Early, "thm7-early"},
    {CurveKind::Thm7Late, "thm7-late"},
};

}  // namespace

CurveKind parse_curve_kind(std::string_view name) {
    for (const auto &k : kKinds) {
        if (k.name == name) return k.kind;
    }
    throw std::invalid_argument("unknown curve kind '" + std::string(name) + "'");
}

std::string_view to_string(CurveKind kind) {
    for (const auto &k : kKinds) {
        if (k.kind == kind) return k.name;
    }
    return "?";
}

std::vector<CurveKind> all_curve_kinds() {
    std::vector<CurveKind> out;
    for (const auto &k : kKinds) out.push_back(k.kind);
    return out;
}

std::string_view to_string(PointFlag flag) {
    switch (flag) {
        case PointFlag::Ok:
            return "ok";
        case PointFlag::Negative:
            return "negative";
        case PointFlag::Continuity:
            return "continuity";
    }
    return "?";
}

TheoryPoint evaluate(CurveKind kind, const CurveParams &p, size_t t) {
    int n_r = p.n_r < 0 ? p.n_a : p.n_r;
    TheoryPoint out;
    out.t = t;
    switch (kind) {
        case CurveKind::Thm1Lb:
            out.bits = thm1_lower_bound(p.n_a, p.n_b, t, Form::Full);
            break;
        case CurveKind::Thm1Asymptotic:
            out.bits = thm1_lower_bound(p.n_a, p.n_b, t, Form::Asymptotic);
            break;
        case CurveKind::Thm2Lb:
            out.bits = thm2_lower_bound(n_r, p.n_a, p.n_b, t, Form::Full);
            break;
        case CurveKind::Thm2Asymptotic:
            out.bits = thm2_lower_bound(n_r, p.n_a, p.n_b, t, Form::Asymptotic);
            break;
        case CurveKind::Thm3Exact:
            out.bits = thm3_unconditioned(p.n_a, p.n_b, t, Form::Exact);
            break;
        case CurveKind::Thm3Early:
            out.bits = thm3_unconditioned(p.n_a, p.n_b, t, Form::Early);
            break;
        case CurveKind::Thm3Late:
            out.bits = thm3_unconditioned(p.n_a, p.n_b, t, Form::Late);
            break;
        case CurveKind::Thm4Exact:
            out.bits = thm4_transition(n_r, p.n_a, p.n_b, t, Form::Exact);
            break;
        case CurveKind::Thm4Asymptotic:
            out.bits = thm4_transition(n_r, p.n_a, p.n_b, t, Form::Asymptotic);
            break;
        case CurveKind::Thm4Piecewise:
            out.bits = thm4_transition(n_r, p.n_a, p.n_b, t, Form::Piecewise);
            break;
        case CurveKind::Thm5Full:
            out.bits = thm5_partial(p.n_a, p.n_b, p.n_e, p.s, t, Form::Full);
            break;
        case CurveKind::Thm5Simplified:
            out.bits = thm5_partial(p.n_a, p.n_b, p.n_e, p.s, t, Form::Simplified);
            if (p.s == 0 || t < p.s) out.flag = PointFlag::Continuity;
            break;
        case CurveKind::Thm6Exact:
            out.bits = thm6_no_reset(p.n_a, p.n_b, t);
            if (t == 0) out.flag = PointFlag::Continuity;
            break;
        case CurveKind::Thm7Exact:
            out.bits = thm7_mixed_reset(p.n_a, p.n_b, t, Form::Exact);
            break;
        case CurveKind::Thm7Early:
            out.bits = thm7_mixed_reset(p.n_a, p.n_b, t, Form::Early);
            break;
        case CurveKind::Thm7Late:
            out.bits = thm7_mixed_reset(p.n_a, p.n_b, t, Form::Late);
            break;
    }
    if (out.flag == PointFlag::Ok && out.bits < 0) {
        out.flag = PointFlag::Negative;
    }
    return out;
}

TheoryCurve make_curve(CurveKind kind, const CurveParams &params, size_t t_max) {
    TheoryCurve curve{kind, params, {}};
    for (size_t t = 0; t <= t_max; t++) {
        curve.points.push_back(evaluate(kind, params, t));
    }
    return curve;
}

}  // namespace qmi::theory
