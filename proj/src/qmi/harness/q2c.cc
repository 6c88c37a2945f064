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

#include <cmath>
#include <stdexcept>

#include "qmi/common/parallel.h"
#include "qmi/dense/protocol.h"
#include "qmi/harness/runner.h"

namespace qmi {

namespace {

struct Branch {
    DenseState state;
    double weight;
};

double branch_value(const DenseState &state, const SystemShape &shape, const Q2cSource &source, RngStream &rng) {
    std::vector<double> joint = readout_distribution(state, shape);
    if (source.shots > 0) joint = sampled_distribution(joint, source.shots, rng);
    return classical_mutual_info(joint, size_t{1} << shape.n_r, size_t{1} << shape.n_a);
}

size_t measured_per_step(const ExperimentSpec &spec, size_t step) {
    if (spec.monitoring.erases_at(step)) return spec.shape.n_b - spec.monitoring.n_erased;
    return spec.shape.n_b;
}

bool can_enumerate(const ExperimentSpec &spec) {
    double records = 1;
    for (size_t t = 1; t <= spec.steps; t++) {
        records *= std::ldexp(1.0, static_cast<int>(measured_per_step(spec, t)));
        if (records > static_cast<double>(kMaxEnumeratedRecords)) return false;
    }
    return true;
}

std::vector<double> enumerated_draw(const ExperimentSpec &spec, size_t m, const Q2cSource &source) {
    RngStream urng(spec.seed, {m, 0});
    RngStream srng(spec.seed, {m, 3});
    RngStream irng(spec.seed, {m, 2});
    const SystemShape &shape = spec.shape;
    UnitarySequence unitaries(spec.dense_ensemble(), shape.n_a + shape.n_b, urng);
    std::vector<Branch> branches{{dense_initial_state(spec, unitaries, irng), 1.0}};
    std::vector<double> out{branch_value(branches[0].state, shape, source, srng)};
    for (size_t t = 1; t <= spec.steps; t++) {
        const CMat &u = unitaries.next();
        uint64_t patterns = uint64_t{1} << measured_per_step(spec, t);
        std::vector<Branch> next;
        for (const Branch &b : branches) {
            for (uint64_t p = 0; p < patterns; p++) {
                DenseState s = b.state;
                double w = run_step_forced(s, shape, u, spec.monitoring, spec.reset, t, p);
                if (w * b.weight > 1e-14) next.push_back({std::move(s), w * b.weight});
            }
        }
        branches = std::move(next);
        double value = 0, total = 0;
        for (const Branch &b : branches) {
            value += b.weight * branch_value(b.state, shape, source, srng);
            total += b.weight;
        }
        out.push_back(value / total);
    }
    return out;
}

std::vector<double> sampled_draw(const ExperimentSpec &spec, size_t m, const Q2cSource &source) {
    RngStream urng(spec.seed, {m, 0});
    RngStream mrng(spec.seed, {m, 1});
    RngStream irng(spec.seed, {m, 2});
    RngStream srng(spec.seed, {m, 3});
    const SystemShape &shape = spec.shape;
    UnitarySequence unitaries(spec.dense_ensemble(), shape.n_a + shape.n_b, urng);
    DenseState state = dense_initial_state(spec, unitaries, irng);
    if (spec.needs_density_matrix()) state.make_mixed();
    std::vector<double> out{branch_value(state, shape, source, srng)};
    for (size_t t = 1; t <= spec.steps; t++) {
        run_step(state, shape, unitaries.next(), spec.monitoring, spec.reset, t, mrng);
        out.push_back(branch_value(state, shape, source, srng));
    }
    return out;
}

}  // namespace

std::vector<double> readout_distribution(const DenseState &state, const SystemShape &shape) {
    std::vector<size_t> ra = SystemShape::range(0, shape.n_r + shape.n_a);
    CMat rho = state.reduced(ra);
    std::vector<double> p(static_cast<size_t>(rho.rows()));
    for (Eigen::Index i = 0; i < rho.rows(); i++) p[static_cast<size_t>(i)] = std::max(0.0, rho(i, i).real());
    return p;
}

double classical_mutual_info(const std::vector<double> &joint, size_t dim_r, size_t dim_a) {
    if (joint.size() != dim_r * dim_a) throw std::invalid_argument("joint distribution has the wrong size");
    double total = 0;
    for (double p : joint) total += p;
    if (!(total > 0)) throw std::invalid_argument("joint distribution is empty");
    std::vector<double> pr(dim_r, 0), pa(dim_a, 0);
    for (size_t r = 0; r < dim_r; r++) {
        for (size_t a = 0; a < dim_a; a++) {
            pr[r] += joint[r * dim_a + a] / total;
            pa[a] += joint[r * dim_a + a] / total;
        }
    }
    double mi = 0;
    for (size_t r = 0; r < dim_r; r++) {
        for (size_t a = 0; a < dim_a; a++) {
            double p = joint[r * dim_a + a] / total;
            if (p > 0) mi += p * std::log2(p / (pr[r] * pa[a]));
        }
    }
    return std::max(0.0, mi);
}

std::vector<double> sampled_distribution(const std::vector<double> &joint, size_t shots, RngStream &rng) {
    if (shots == 0) throw std::invalid_argument("sampling needs at least one shot");
    std::discrete_distribution<size_t> dist(joint.begin(), joint.end());
    std::vector<double> counts(joint.size(), 0.5);
    for (size_t k = 0; k < shots; k++) counts[dist(rng.engine())] += 1;
    double total = static_cast<double>(shots) + 0.5 * static_cast<double>(joint.size());
    for (double &c : counts) c /= total;
    return counts;
}

Q2cResult q2c_mutual_info(const ExperimentSpec &base, Q2cMode mode, Q2cSource source) {
    ExperimentSpec spec = base;
    if (spec.engine != Engine::Dense) throw std::invalid_argument("Q2C runs on the dense engine");
    if (spec.ensemble.kind != EnsembleChoice::Brickwork && spec.ensemble.kind != EnsembleChoice::Haar) {
        throw std::invalid_argument("Q2C uses the brickwork or haar ensemble");
    }
    if (mode == Q2cMode::Unconditioned) {
        spec.monitoring = Monitoring::unmonitored();
    } else if (spec.monitoring.kind == MonitoringKind::Unmonitored) {
        spec.monitoring = Monitoring::monitored();
    }
    spec.validate();

    Q2cResult result;
    size_t support = size_t{1} << (spec.shape.n_r + spec.shape.n_a);
    result.variance_warning = source.shots > 0 && source.shots < 2 * support;
    result.exact_enumeration = mode == Q2cMode::Conditioned && can_enumerate(spec);
    std::vector<std::vector<double>> samples(spec.trajectories);
    parallel_for(spec.trajectories, [&](size_t m) {
        samples[m] = result.exact_enumeration ? enumerated_draw(spec, m, source) : sampled_draw(spec, m, source);
    });
    result.series = summarize(std::move(samples), "classical");
    result.series.spec_hash = spec_hash(spec);
    return result;
}

}  // namespace qmi
