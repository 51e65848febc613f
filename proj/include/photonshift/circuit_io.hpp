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

#include <filesystem>
#include <string>

#include "json.hpp"
#include "photonshift/circuit.hpp"

namespace photonshift {

/// JSON circuit description:
///   {"modes": m,
///    "parameters": [{"name": "theta0", "value": 0.0}, ...],
///    "elements": [{"type": "phase_shifter", "mode": 0, "layer": 0,
///                  "binding": {"kind": "linear", "parameter": "theta0",
///                              "multiplier": 1, "offset": 0.0}},
///                 {"type": "phase_shifter", ..., "binding": {"kind": "constant", "value": 0.0}},
///                 {"type": "beam_splitter", "modes": [0, 1], "mixing_angle": 0.785..., "layer": 0}]}
/// Doubles are written with round-trip precision, so parse(serialize(c)) == c.
nlohmann::json circuit_to_json(const ParametricCircuit& c);
ParametricCircuit circuit_from_json(const nlohmann::json& j);

void save_circuit(const ParametricCircuit& c, const std::filesystem::path& path);
ParametricCircuit load_circuit(const std::filesystem::path& path);

}  // namespace photonshift
