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

#ifndef QMI_COMMON_RNG_H
#define QMI_COMMON_RNG_H

#include <cstdint>
#include <initializer_list>
#include <random>

namespace qmi {

/// SplitMix64 finalizer. Bijective on 64-bit words.
uint64_t mix64(uint64_t x);

/// Hashes a master seed together with a path of stream indices
/// (e.g. experiment, trajectory, step) into an independent engine seed.
uint64_t derive_seed(uint64_t master, std::initializer_list<uint64_t> path);

/// A random stream owned by exactly one worker.
///
/// Streams are addressed by (seed, indices...) rather than drawn from a shared
/// generator, so results never depend on scheduling or thread count.
class RngStream {
   public:
    explicit RngStream(uint64_t seed) : engine_(seed) {
    }
    RngStream(uint64_t master, std::initializer_list<uint64_t> path) : engine_(derive_seed(master, path)) {
    }

    uint64_t next_u64() {
        return engine_();
    }
    bool bit() {
        return (engine_() >> 63) != 0;
    }
    /// Uniform on [0, 1).
    double uniform() {
        return std::uniform_real_distribution<double>(0.0, 1.0)(engine_);
    }
    double normal() {
        return std::normal_distribution<double>(0.0, 1.0)(engine_);
    }
    /// Uniform integer in [0, n).
    uint64_t below(uint64_t n) {
        return std::uniform_int_distribution<uint64_t>(0, n - 1)(engine_);
    }

    std::mt19937_64 &engine() {
        return engine_;
    }

   private:
    std::mt19937_64 engine_;
};

}  // namespace qmi

#endif
