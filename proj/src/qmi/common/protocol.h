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

#ifndef QMI_COMMON_PROTOCOL_H
#define QMI_COMMON_PROTOCOL_H

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace qmi {

enum class MonitoringKind { Monitored, Unmonitored, Partial };

/// What happens to the bath record after each step. Partial monitoring erases
/// the first `n_erased` bath qubits on every step that is a multiple of
/// `period` (period 0 means never) and records the rest.
struct Monitoring {
    MonitoringKind kind = MonitoringKind::Monitored;
    size_t period = 0;
    size_t n_erased = 0;

    static Monitoring monitored() {
        return {};
    }
    static Monitoring unmonitored() {
        return {MonitoringKind::Unmonitored, 0, 0};
    }
    static Monitoring partial(size_t period, size_t n_erased) {
        return {MonitoringKind::Partial, period, n_erased};
    }

    /// Steps are numbered from 1.
    bool erases_at(size_t step) const {
        return kind == MonitoringKind::Partial && period != 0 && step % period == 0;
    }
};

enum class ResetKind {
    PureZero,    // bath returns to |0...0>
    None,        // bath keeps its post-measurement state
    FullyMixed,  // bath replaced by I/d_B (unmonitored only)
};

inline std::string_view to_string(MonitoringKind k) {
    switch (k) {
        case MonitoringKind::Monitored:
            return "monitored";
        case MonitoringKind::Unmonitored:
            return "unmonitored";
        case MonitoringKind::Partial:
            return "partial";
    }
    return "?";
}

inline std::string_view to_string(ResetKind k) {
    switch (k) {
        case ResetKind::PureZero:
            return "pure-zero";
        case ResetKind::None:
            return "none";
        case ResetKind::FullyMixed:
            return "fully-mixed";
    }
    return "?";
}

inline ResetKind parse_reset(std::string_view s) {
    if (s == "pure-zero" || s == "to-zero" || s == "zero") return ResetKind::PureZero;
    if (s == "none" || s == "dephase") return ResetKind::None;
    if (s == "fully-mixed") return ResetKind::FullyMixed;
    throw std::invalid_argument("unknown reset mode '" + std::string(s) + "'");
}

inline MonitoringKind parse_monitoring(std::string_view s) {
    if (s == "monitored") return MonitoringKind::Monitored;
    if (s == "unmonitored") return MonitoringKind::Unmonitored;
    if (s == "partial") return MonitoringKind::Partial;
    throw std::invalid_argument("unknown monitoring mode '" + std::string(s) + "'");
}

}  // namespace qmi

#endif
