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

#ifndef QMI_COMMON_SHAPE_H
#define QMI_COMMON_SHAPE_H

#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace qmi {

/// Register sizes. Qubits are laid out as R, then A, then B.
struct SystemShape {
    size_t n_r = 0;
    size_t n_a = 0;
    size_t n_b = 0;

    size_t total() const {
        return n_r + n_a + n_b;
    }
    size_t r_begin() const {
        return 0;
    }
    size_t a_begin() const {
        return n_r;
    }
    size_t b_begin() const {
        return n_r + n_a;
    }

    std::vector<size_t> r_qubits() const {
        return range(r_begin(), n_r);
    }
    std::vector<size_t> a_qubits() const {
        return range(a_begin(), n_a);
    }
    std::vector<size_t> b_qubits() const {
        return range(b_begin(), n_b);
    }
    /// A followed by B: the footprint of each step's unitary.
    std::vector<size_t> ab_qubits() const {
        return range(a_begin(), n_a + n_b);
    }

    void validate() const {
        if (n_r > n_a) {
            throw std::invalid_argument(
                "invalid shape: reference register (" + std::to_string(n_r) + ") larger than system (" +
                std::to_string(n_a) + ")");
        }
    }

    static std::vector<size_t> range(size_t begin, size_t count) {
        std::vector<size_t> out(count);
        std::iota(out.begin(), out.end(), begin);
        return out;
    }
};

}  // namespace qmi

#endif
