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

#ifndef QMI_HARNESS_Q2C_H
#define QMI_HARNESS_Q2C_H

#include <vector>

#include "qmi/dense/dense_state.h"
#include "qmi/harness/experiment_spec.h"
#include "qmi/harness/qmi_series.h"

namespace qmi {

enum class Q2cMode { Conditioned, Unconditioned };

struct Q2cSource {
    size_t shots = 0;  // 0 = exact distribution
};

struct Q2cResult {
    QmiSeries series;
    bool variance_warning = false;  // shots below twice the support size
    bool exact_enumeration = false;  // conditioned average over every bath record
};

/// Joint distribution P(z_R, z_A) of computational-basis readouts, indexed
/// z_R * d_A + z_A.
std::vector<double> readout_distribution(const DenseState &state, const SystemShape &shape);

/// KL divergence of a joint distribution from the product of its marginals,
/// in bits.
double classical_mutual_info(const std::vector<double> &joint, size_t dim_r, size_t dim_a);

/// Empirical distribution of `shots` draws with an add-1/2 pseudo-count.
std::vector<double> sampled_distribution(const std::vector<double> &joint, size_t shots, RngStream &rng);

/// Largest number of bath records enumerated exactly per circuit draw.
inline constexpr size_t kMaxEnumeratedRecords = 4096;

/// Q2C mutual information per step. Each of spec.trajectories circuit draws
/// contributes one value; conditioned mode averages over bath records, by
/// exact enumeration when the record count allows and by Born sampling
/// (one record per draw) otherwise.
Q2cResult q2c_mutual_info(const ExperimentSpec &spec, Q2cMode mode, Q2cSource source);

}  // namespace qmi

#endif
