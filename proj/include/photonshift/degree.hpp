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

#include <span>
#include <string>
#include <vector>

#include "photonshift/circuit.hpp"
#include "photonshift/fock.hpp"

namespace photonshift {

/// Connectivity threshold separating structural zeros of a mesh from round-off.
inline constexpr double kConnectivityTol = 1e-12;

/// Maximum number of photons that can traverse the phase on `mode` at once for the
/// given input/output pair, an upper bound on the Fourier degree of P(s|r) in that phase.
int phase_degree(const ComplexMatrix& before, const ComplexMatrix& after, int mode,
                 const OccupationList& input, const OccupationList& output,
                 double tol = kConnectivityTol);

struct PhaseDegree {
    std::size_t element = 0;
    int multiplier = 0;
    int degree = 0;  // K_M of this phase instance
};

struct DegreeReport {
    std::string parameter;
    std::vector<PhaseDegree> instances;
    /// R = sum over instances of |multiplier| * K_M.
    int degree = 0;
    int photons = 0;
};

/// Degree of P(output|input) in one circuit parameter, at the given parameter vector.
DegreeReport parameter_degree(const ParametricCircuit& c, const std::string& name,
                              const OccupationList& input, const OccupationList& output,
                              std::span<const double> values);

/// Maximum over a set of outputs (per instance and in total).
DegreeReport parameter_degree(const ParametricCircuit& c, const std::string& name,
                              const OccupationList& input,
                              const std::vector<OccupationList>& outputs,
                              std::span<const double> values);

/// Conservative bound without any connectivity analysis: N per bound phase instance.
DegreeReport photon_number_degree(const ParametricCircuit& c, const std::string& name,
                                  int photons);

}  // namespace photonshift
