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

#ifndef QMI_COMMON_ENTROPY_KIND_H
#define QMI_COMMON_ENTROPY_KIND_H

#include <stdexcept>
#include <string>
#include <string_view>

namespace qmi {

enum class EntropyKind { VonNeumann, Renyi2 };

inline std::string_view to_string(EntropyKind k) {
    return k == EntropyKind::VonNeumann ? "von-neumann" : "renyi2";
}

inline EntropyKind parse_entropy_kind(std::string_view s) {
    if (s == "von-neumann" || s == "vn") return EntropyKind::VonNeumann;
    if (s == "renyi2" || s == "renyi-2") return EntropyKind::Renyi2;
    throw std::invalid_argument("unknown entropy kind '" + std::string(s) + "'");
}

}  // namespace qmi

#endif
