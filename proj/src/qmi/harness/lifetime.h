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

#ifndef QMI_HARNESS_LIFETIME_H
#define QMI_HARNESS_LIFETIME_H

#include <cstddef>
#include <span>
#include <string>

namespace qmi {

struct Lifetime {
    double steps = 0;
    bool censored = false;  // never crossed; the lifetime exceeds `horizon`
    size_t horizon = 0;

    std::string describe() const;
};

/// First time the series falls to epsilon * series[0], linearly interpolated
/// between the bracketing integer steps.
Lifetime estimate_lifetime(std::span<const double> series, double epsilon);

}  // namespace qmi

#endif
