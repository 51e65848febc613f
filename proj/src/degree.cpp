// Copyright 2026 The photonshift Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "photonshift/degree.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "photonshift/error.hpp"

namespace photonshift {

// Writing U(phi) = after * Phi(phi) * before, each entry is
//   U_hj(phi) = c_hj + d_hj e^{i phi},   d_hj = after[h][mode] * before[mode][j].
// A permutation term of the permanent, prod_k U_{sigma(k), k}, has degree in e^{i phi}
// equal to the number of its factors with d != 0. Because d is rank one, d_hj != 0
// exactly when column j is connected (before[mode][j] != 0) and row h is connected
// (after[h][mode] != 0). The best permutation pairs connected photons with connected
// output slots as far as possible, so
//   K_M = max_sigma K_sigma = min(#connected input photons, #connected output photons),
// counting photons with multiplicity. |Per|^2 then has Fourier degree at most K_M.
int phase_degree(const ComplexMatrix& before, const ComplexMatrix& after, int mode,
                 const OccupationList& input, const OccupationList& output, double tol) {
    if (input.photon_count() != output.photon_count()) {
        throw ContractError("phase_degree: photon numbers differ");
    }
    const auto m = static_cast<std::size_t>(before.rows());
    if (input.mode_count() != m || output.mode_count() != m || after.rows() != before.rows()) {
        throw DimensionError("phase_degree: mode count mismatch");
    }
    int connected_in = 0;
    for (std::size_t j = 0; j < m; ++j) {
        if (input[j] > 0 && std::abs(before(mode, static_cast<Eigen::Index>(j))) > tol) {
            connected_in += input[j];
        }
    }
    int connected_out = 0;
    for (std::size_t h = 0; h < m; ++h) {
        if (output[h] > 0 && std::abs(after(static_cast<Eigen::Index>(h), mode)) > tol) {
            connected_out += output[h];
        }
    }
    return std::min(connected_in, connected_out);
}

namespace {

// When one parameter drives several phases, the connectivity around one instance
// depends on the others; probe a few values of the parameter and keep the maximum.
std::vector<std::vector<double>> probe_points(std::size_t index, std::size_t instances,
                                              std::span<const double> values) {
    std::vector<std::vector<double>> points{std::vector<double>(values.begin(), values.end())};
    if (instances > 1) {
        for (double shift : {1.0, 2.3}) {
            auto p = points.front();
            p[index] += shift;
            points.push_back(std::move(p));
        }
    }
    return points;
}

}  // namespace

DegreeReport parameter_degree(const ParametricCircuit& c, const std::string& name,
                              const OccupationList& input,
                              const std::vector<OccupationList>& outputs,
                              std::span<const double> values) {
    const std::size_t index = c.parameter_index(name);
    if (values.size() != c.parameter_count()) throw ContractError("wrong parameter count");

    DegreeReport report;
    report.parameter = name;
    report.photons = input.photon_count();
    const auto instances = parameter_phase_instances(c, name);
    for (const auto& inst : instances) report.instances.push_back({inst.element, inst.multiplier, 0});

    const auto points = probe_points(index, instances.size(), values);
    for (const auto& output : outputs) {
        std::vector<int> best(instances.size(), 0);
        for (const auto& point : points) {
            for (std::size_t i = 0; i < instances.size(); ++i) {
                const PhaseSplit split = split_at_phase(c, instances[i].element, point);
                best[i] = std::max(best[i], phase_degree(split.before, split.after, split.mode,
                                                         input, output));
            }
        }
        int total = 0;
        for (std::size_t i = 0; i < instances.size(); ++i) {
            total += std::abs(instances[i].multiplier) * best[i];
            report.instances[i].degree = std::max(report.instances[i].degree, best[i]);
        }
        report.degree = std::max(report.degree, total);
    }
    return report;
}

DegreeReport parameter_degree(const ParametricCircuit& c, const std::string& name,
                              const OccupationList& input, const OccupationList& output,
                              std::span<const double> values) {
    return parameter_degree(c, name, input, std::vector<OccupationList>{output}, values);
}

DegreeReport photon_number_degree(const ParametricCircuit& c, const std::string& name,
                                  int photons) {
    DegreeReport report;
    report.parameter = name;
    report.photons = photons;
    for (const auto& inst : parameter_phase_instances(c, name)) {
        report.instances.push_back({inst.element, inst.multiplier, photons});
        report.degree += std::abs(inst.multiplier) * photons;
    }
    return report;
}

}  // namespace photonshift
