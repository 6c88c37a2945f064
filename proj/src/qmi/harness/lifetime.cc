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

#include "qmi/harness/lifetime.h"

#include <cstdio>
#include <stdexcept>

namespace qmi {

std::string Lifetime::describe() const {
    char buf[64];
    if (censored) {
        std::snprintf(buf, sizeof buf, "> %zu", horizon);
    } else {
        std::snprintf(buf, sizeof buf, "%.6g", steps);
    }
    return buf;
}

Lifetime estimate_lifetime(std::span<const double> series, double epsilon) {
    if (series.size() < 2) throw std::invalid_argument("lifetime needs at least two points");
    if (!(epsilon > 0 && epsilon < 1)) throw std::invalid_argument("epsilon must lie in (0, 1)");
    double q0 = series[0];
    if (!(q0 > 0)) throw std::invalid_argument("lifetime is undefined when the initial QMI is zero");
    double target = epsilon * q0;
    for (size_t t = 1; t < series.size(); t++) {
        if (series[t] <= target) {
            double prev = series[t - 1];
            double frac = prev == series[t] ? 1.0 : (prev - target) / (prev - series[t]);
            return {static_cast<double>(t - 1) + frac, false, series.size() - 1};
        }
    }
    Lifetime out;
    out.censored = true;
    out.horizon = series.size() - 1;
    out.steps = static_cast<double>(out.horizon);
    return out;
}

}  // namespace qmi
