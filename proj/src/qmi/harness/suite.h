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

#ifndef QMI_HARNESS_SUITE_H
#define QMI_HARNESS_SUITE_H

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qmi/harness/qmi_series.h"

namespace qmi {

struct CheckRow {
    std::string experiment;
    std::string check;
    bool passed = false;
    std::string detail;
};

struct SuiteResult {
    std::vector<CheckRow> rows;
    size_t failed_experiments = 0;

    bool passed() const;
};

/// Compares a series with a theory curve at every t in [t_min, t_max]:
/// |mean - theory| <= max(abs_tol, stderr_mult * stderr, rel_tol * |theory|).
CheckRow check_against_theory(const QmiSeries &series, const nlohmann::json &check);

/// Lifetime of the series versus an expected value or a theory curve's own
/// lifetime over the same horizon, within rel_tol.
CheckRow check_lifetime(const QmiSeries &series, const nlohmann::json &check, double default_epsilon);

/// Runs each experiment of the config, writes <name>.csv and <name>.json,
/// manifest.json, report.json and report.txt into `out_dir`. A suite seed,
/// when present, derives each experiment's seed from (seed, index).
SuiteResult run_suite(const nlohmann::json &config, const std::string &out_dir, std::optional<uint64_t> seed_override = {});

}  // namespace qmi

#endif
