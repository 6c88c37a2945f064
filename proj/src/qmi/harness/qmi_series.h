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

#ifndef QMI_HARNESS_QMI_SERIES_H
#define QMI_HARNESS_QMI_SERIES_H

#include <string>
#include <vector>

#include "qmi/harness/experiment_spec.h"

namespace qmi {

struct QmiSeries {
    std::vector<size_t> t;
    std::vector<double> mean;    // bits
    std::vector<double> standard_error;  // sample std / sqrt(n_traj)
    size_t n_traj = 0;
    std::string entropy_kind;
    std::string spec_hash;
    std::string code_version{kCodeVersion};
    /// Per-trajectory values, samples[m][t]. Kept in memory, not persisted.
    std::vector<std::vector<double>> samples;
};

/// Fills mean and stderr from `samples` (fixed trajectory order).
QmiSeries summarize(std::vector<std::vector<double>> samples, std::string entropy_kind);

/// Writes `t,mean_qmi_bits,stderr,n_traj,entropy_kind` rows after a
/// `# format_version: N` line.
void write_series_csv(const QmiSeries &series, const std::string &path);
QmiSeries read_series_csv(const std::string &path);

/// Sidecar with the format version, the full spec and the series metadata.
void write_sidecar(const QmiSeries &series, const nlohmann::json &spec, const nlohmann::json &extra, const std::string &path);

void write_json(const nlohmann::json &doc, const std::string &path);

}  // namespace qmi

#endif
