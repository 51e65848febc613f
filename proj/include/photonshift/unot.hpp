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

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "photonshift/circuit.hpp"
#include "photonshift/fock.hpp"
#include "photonshift/vqe.hpp"

namespace photonshift {

/// |psi> = cos(theta/2) e^{i phi} |0> + sin(theta/2) |1>.
struct BlochAngles {
    double theta = 0.0;
    double phi = 0.0;
};

/// Universal-NOT experiment on 3 modes. The qubit lives in modes (0, 1); mode 2 is the
/// ancilla and runs with no photon are discarded.
///   preparation: photon in mode 1, splitter, theta_p on mode 1, splitter, phi_p on mode 0
///   gate:        3-mode mesh, cells on (0,1), (1,2), (0,1), five free phases u1..u5
///   projection:  pi - phi_p on mode 0, splitter, pi - theta_p (plus pi) on mode 1, splitter
/// A photon in mode 0 then signals the orthogonal state.
struct UnotProblem {
    ParametricCircuit circuit;
    std::vector<std::string> variational;  // u1..u5
    OccupationList input{0, 1, 0};
    OccupationList detect{1, 0, 0};
    /// Added to the analysed degree of every variational phase (testing aid).
    int degree_offset = 0;
};

/// The gate alone, parameters u1..u5.
ParametricCircuit unot_block();
UnotProblem make_unot_problem();

/// Six preparation settings of the cost function.
const std::array<BlochAngles, 6>& unot_cost_points();

/// Probability that the photon exits mode 0 (fidelity times post-selection success).
double unot_detection_probability(const UnotProblem& p, std::span<const double> theta,
                                  const BlochAngles& state);
/// Post-selection success: no photon in the ancilla mode.
double unot_success_probability(const UnotProblem& p, std::span<const double> theta,
                                const BlochAngles& state);

/// S = -(1/6) sum over the six settings of the detection probability.
double unot_cost(const UnotProblem& p, std::span<const double> theta,
                 const std::optional<ShotOptions>& shots = std::nullopt);
/// Same integral from the full 4 x 4 tensor rule (|sin|/4 weight in theta, uniform in phi).
double unot_cost_tensor(const UnotProblem& p, std::span<const double> theta);

/// Degree of the detection probability in each variational phase, maximised over the
/// six settings.
std::vector<int> unot_degrees(const UnotProblem& p, std::span<const double> theta);

std::vector<double> unot_gradient(const UnotProblem& p, std::span<const double> theta,
                                  const std::optional<ShotOptions>& shots = std::nullopt);

struct FidelityTest {
    double mean = 0.0;
    double standard_error = 0.0;
    std::vector<double> fidelities;
    std::vector<double> bin_edges;  // bins + 1 edges on [0, 1]
    std::vector<std::uint64_t> histogram;
};

/// Fidelity conditioned on post-selection for `n_states` Haar-random qubit states.
FidelityTest unot_fidelity_test(const UnotProblem& p, std::span<const double> theta,
                                std::size_t n_states, std::uint64_t seed, int bins = 20);

/// Multi-start optimisation of unot_cost, seeded as run_vqe.
MultiStartResult run_unot(const UnotProblem& p, std::uint64_t seed, const MultiStartOptions& options);

}  // namespace photonshift
