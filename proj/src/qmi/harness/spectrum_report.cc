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


#include "qmi/harness/spectrum_report.h"

#include <cmath>
#include <cstdio>
#include <memory>
#include <stdexcept>

#include "qmi/harness/experiment_spec.h"

namespace qmi {

void write_spectrum_csv(const ChannelSpectrum &spec, const std::string &path) {
    std::unique_ptr<FILE, int (*)(FILE *)> f(std::fopen(path.c_str(), "w"), std::fclose);
    if (!f) throw std::runtime_error("cannot write " + path);
    std::fprintf(f.get(), "# format_version: %d\nre,im,modulus\n", kFormatVersion);
    for (const cplx &z : spec.eigenvalues) {
        std::fprintf(f.get(), "%.12g,%.12g,%.12g\n", z.real(), z.imag(), std::abs(z));
    }
}

nlohmann::json spectrum_summary(const ChannelSpectrum &spec, double radius) {
    auto number = [](double x) { return std::isfinite(x) ? nlohmann::json(x) : nlohmann::json(nullptr); };
    return {
        {"format_version", kFormatVersion},
        {"n_eigenvalues", spec.eigenvalues.size()},
        {"lambda0", {spec.lambda0.real(), spec.lambda0.imag()}},
        {"lambda1", {spec.lambda1.real(), spec.lambda1.imag()}},
        {"lambda1_modulus", std::abs(spec.lambda1)},
        {"tau_eig", number(spec.tau_eig)},
        {"bulk_radius", spec.bulk_radius},
        {"outlier_radius", radius},
        {"fraction_outside", fraction_outside(spec, radius)},
        {"has_outlier", std::abs(spec.lambda1) > radius},
    };
}

}  // namespace qmi
