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

#ifndef QMI_DENSE_UNITARIES_H
#define QMI_DENSE_UNITARIES_H

#include <optional>
#include <string_view>
#include <vector>

#include "qmi/common/rng.h"
#include "qmi/dense/dense_state.h"

namespace qmi {

CMat haar_unitary(size_t dim, RngStream &rng);

enum class HamiltonianKind { Ising, Mfim };

struct HamiltonianParams {
    HamiltonianKind kind = HamiltonianKind::Ising;
    size_t n = 0;
    double t_h = 50;
    Eigen::MatrixXd couplings;  // symmetric, zero diagonal (Ising)
    Eigen::VectorXd field_x;    // Ising transverse fields
    Eigen::VectorXd field_z;    // Ising longitudinal fields
    double h_x = 0.8090;        // MFIM uniform fields
    double h_y = 0.9045;
};

/// All-to-all Ising couplings and fields drawn standard normal.
HamiltonianParams draw_ising(size_t n, double t_h, RngStream &rng);
HamiltonianParams mfim(size_t n, double t_h, double h_x = 0.8090, double h_y = 0.9045);

CMat hamiltonian_matrix(const HamiltonianParams &params);
/// exp(-i H t_H) through the Hermitian eigendecomposition of H.
CMat hamiltonian_unitary(const HamiltonianParams &params);

/// Angles of one brickwork layer, per qubit.
struct BrickworkLayer {
    std::vector<double> theta;  // X rotation
    std::vector<double> phi;    // Y rotation
};

CMat brickwork_unitary(size_t n, const std::vector<BrickworkLayer> &layers);
/// Angles uniform on [0, 2 pi).
CMat brickwork_unitary(size_t n, size_t n_layers, RngStream &rng);

enum class EnsembleKind { Haar, Ising, Mfim, Brickwork };

std::string_view to_string(EnsembleKind k);
EnsembleKind parse_ensemble(std::string_view s);

struct EnsembleSpec {
    EnsembleKind kind = EnsembleKind::Haar;
    bool identical = false;  // reuse one draw at every step
    double t_h = 50;
    double h_x = 0.8090;
    double h_y = 0.9045;
    size_t layers = 4;
};

/// Per-step unitaries on A and B for one realization of an ensemble.
class UnitarySequence {
   public:
    UnitarySequence(EnsembleSpec spec, size_t n_qubits, RngStream rng);

    const CMat &next();

   private:
    CMat draw();

    EnsembleSpec spec_;
    size_t n_;
    RngStream rng_;
    std::optional<CMat> fixed_;
    CMat current_;
};

}  // namespace qmi

#endif
