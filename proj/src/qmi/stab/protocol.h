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

#ifndef QMI_STAB_PROTOCOL_H
#define QMI_STAB_PROTOCOL_H

#include <vector>

#include "qmi/common/protocol.h"
#include "qmi/common/shape.h"
#include "qmi/stab/stabilizer_state.h"

namespace qmi {

/// One step of the protocol: `op` on A∪B, then the bath is measured, traced
/// out or partially erased according to `monitoring`. Returns the recorded
/// bath outcomes (empty when nothing is recorded).
std::vector<uint8_t> run_step(
    StabilizerState &state,
    const SystemShape &shape,
    const CliffordOp &op,
    const Monitoring &monitoring,
    ResetKind reset,
    size_t step,
    RngStream &rng);

}  // namespace qmi

#endif
