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


#ifndef QMI_HARNESS_SPECTRUM_REPORT_H
#define QMI_HARNESS_SPECTRUM_REPORT_H

#include <string>

#include <json.hpp>

#include "qmi/spectrum/channel_spectrum.h"

namespace qmi {

/// Writes `re,im,modulus` rows after a `# format_version: N` line, in the
/// spectrum's sort order.
void write_spectrum_csv(const ChannelSpectrum &spec, const std::string &path);

/// Leading eigenvalues, relaxation time, bulk radius and the outlier test
/// against `radius`.
nlohmann::json spectrum_summary(const ChannelSpectrum &spec, double radius);

}  // namespace qmi

#endif
