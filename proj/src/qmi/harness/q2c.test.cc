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

#include "qmi/harness/q2c.h"

#include <gtest/gtest.h>

#include <cmath>

#include "qmi/dense/protocol.h"
#include "qmi/harness/runner.h"

namespace qmi {
namespace {

using nlohmann::json;

ExperimentSpec q2c_spec(size_t trajectories, size_t steps) {
    return spec_from_json(json{{"shape", {{"n_a", 2}, {"n_b", 1}}}, {"engine", "dense"},
                               {"ensemble", {{"kind", "brickwork"}, {"layers", 4}}}, {"monitoring", "monitored"},
                               {"steps", steps}, {"trajectories", trajectories}, {"seed", 21}});
}

TEST(Q2c, ProductDistributionHasZeroInformation) {
    std::vector<double> pr{0.3, 0.7}, pa{0.1, 0.2, 0.3, 0.4}, joint;
    for (double r : pr) {
        for (double a : pa) joint.push_back(r * a);
    }
    EXPECT_NEAR(classical_mutual_info(joint, 2, 4), 0, 1e-12);
}

TEST(Q2c, PerfectCopyOfUniformBits) {
    for (size_t k = 1; k <= 4; k++) {
        size_t d = size_t{1} << k;
        std::vector<double> joint(d * d, 0);
        for (size_t z = 0; z < d; z++) joint[z * d + z] = 1.0 / static_cast<double>(d);
        EXPECT_NEAR(classical_mutual_info(joint, d, d), static_cast<double>(k), 1e-12);
    }
}

TEST(Q2c, BellPairsReadOutAsCopies) {
    SystemShape shape{3, 3, 0};
    RngStream rng(1);
    DenseState s = make_initial_state({}, shape, rng);
    EXPECT_NEAR(classical_mutual_info(readout_distribution(s, shape), 8, 8), 3, 1e-12);
}

TEST(Q2c, BoundedByQuantumMutualInformation) {
    RngStream rng(22);
    SystemShape shape{2, 2, 1};
    for (int k = 0; k < 20; k++) {
        UnitarySequence seq({EnsembleKind::Haar}, 3, RngStream(rng.next_u64()));
        InitialStateSpec init;
        init.family = k % 2 ? InitialFamily::PerturbedHaar : InitialFamily::BellPairs;
        init.delta = 0.3;
        DenseState s = make_initial_state(init, shape, rng);
        for (size_t t = 1; t <= 3; t++) {
            run_step(s, shape, seq.next(), Monitoring::unmonitored(), ResetKind::PureZero, t, rng);
            double classical = classical_mutual_info(readout_distribution(s, shape), 4, 4);
            double quantum = qmi(s, shape.r_qubits(), shape.a_qubits(), EntropyKind::VonNeumann);
            EXPECT_LE(classical, quantum + 1e-9);
        }
    }
}

TEST(Q2c, SampledEstimateConverges) {
    RngStream rng(23);
    std::vector<double> joint{0.4, 0.05, 0.05, 0.1, 0.02, 0.08, 0.2, 0.1};
    double exact = classical_mutual_info(joint, 2, 4);
    double prev = 1e9;
    for (size_t shots : {1000, 10000, 100000}) {
        double mse = 0;
        for (int k = 0; k < 200; k++) {
            double e = classical_mutual_info(sampled_distribution(joint, shots, rng), 2, 4) - exact;
            mse += e * e / 200;
        }
        EXPECT_LT(mse, prev) << shots;
        prev = mse;
    }
}

TEST(Q2c, SmoothingAddsHalfCount) {
    RngStream rng(24);
    std::vector<double> joint{1, 0, 0, 0};
    auto p = sampled_distribution(joint, 10, rng);
    EXPECT_NEAR(p[0], 10.5 / 12, 1e-12);
    EXPECT_NEAR(p[3], 0.5 / 12, 1e-12);
}

TEST(Q2c, EnumerationMatchesBornSampling) {
    // Exact conditioned average versus many Born-sampled trajectories of the
    // same circuit (identical unitary, one draw).
    ExperimentSpec spec = q2c_spec(1, 4);
    spec.identical_unitary = true;
    Q2cResult exact = q2c_mutual_info(spec, Q2cMode::Conditioned, {});
    ASSERT_TRUE(exact.exact_enumeration);

    RngStream urng(spec.seed, {0, 0});
    UnitarySequence seq(spec.dense_ensemble(), 3, urng);
    const CMat u = seq.next();
    size_t m = 4000;
    std::vector<double> sum(5, 0), sum2(5, 0);
    RngStream rng(25);
    for (size_t k = 0; k < m; k++) {
        RngStream init(0);
        DenseState s = make_initial_state({}, spec.shape, init);
        for (size_t t = 1; t <= 4; t++) {
            run_step(s, spec.shape, u, Monitoring::monitored(), ResetKind::PureZero, t, rng);
            double v = classical_mutual_info(readout_distribution(s, spec.shape), 4, 4);
            sum[t] += v;
            sum2[t] += v * v;
        }
    }
    for (size_t t = 1; t <= 4; t++) {
        double mean = sum[t] / static_cast<double>(m);
        double se = std::sqrt((sum2[t] / static_cast<double>(m) - mean * mean) / static_cast<double>(m));
        EXPECT_NEAR(exact.series.mean[t], mean, 4 * se + 1e-9) << "t=" << t;
    }
}

TEST(Q2c, FallsBackToSamplingBeyondEnumerationLimit) {
    ExperimentSpec spec = q2c_spec(2, 13);
    Q2cResult r = q2c_mutual_info(spec, Q2cMode::Conditioned, {});
    EXPECT_FALSE(r.exact_enumeration);
    EXPECT_EQ(r.series.mean.size(), 14u);
}

TEST(Q2c, VarianceWarningForFewShots) {
    ExperimentSpec spec = q2c_spec(1, 2);
    EXPECT_TRUE(q2c_mutual_info(spec, Q2cMode::Unconditioned, {20}).variance_warning);
    EXPECT_FALSE(q2c_mutual_info(spec, Q2cMode::Unconditioned, {64}).variance_warning);
}

TEST(Q2c, RejectsOtherEngines) {
    ExperimentSpec spec = q2c_spec(1, 2);
    spec.ensemble.kind = EnsembleChoice::Ising;
    EXPECT_THROW(q2c_mutual_info(spec, Q2cMode::Conditioned, {}), std::invalid_argument);
}

}  // namespace
}  // namespace qmi
