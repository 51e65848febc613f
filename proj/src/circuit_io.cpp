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

#include "photonshift/circuit_io.hpp"

#include <fstream>

#include "photonshift/error.hpp"

namespace photonshift {

using nlohmann::json;

json circuit_to_json(const ParametricCircuit& c) {
    json params = json::array();
    for (const auto& p : c.parameters()) params.push_back({{"name", p.name}, {"value", p.value}});

    json elements = json::array();
    for (const auto& e : c.elements()) {
        if (const auto* ps = std::get_if<PhaseShifter>(&e.kind)) {
            json binding;
            if (ps->binding.is_constant()) {
                binding = {{"kind", "constant"}, {"value", ps->binding.offset()}};
            } else {
                binding = {{"kind", "linear"},
                           {"parameter", ps->binding.parameter()},
                           {"multiplier", ps->binding.multiplier()},
                           {"offset", ps->binding.offset()}};
            }
            elements.push_back(
                {{"type", "phase_shifter"}, {"mode", ps->mode}, {"layer", e.layer}, {"binding", binding}});
        } else {
            const auto& bs = std::get<BeamSplitter>(e.kind);
            elements.push_back({{"type", "beam_splitter"},
                                {"modes", {bs.mode_a, bs.mode_b}},
                                {"mixing_angle", bs.mixing_angle},
                                {"layer", e.layer}});
        }
    }
    return {{"modes", c.mode_count()}, {"parameters", params}, {"elements", elements}};
}

ParametricCircuit circuit_from_json(const json& j) {
    try {
        ParametricCircuit c(j.at("modes").get<int>());
        if (j.contains("parameters")) {
            for (const auto& p : j.at("parameters")) {
                c.add_parameter(p.at("name").get<std::string>(), p.value("value", 0.0));
            }
        }
        for (const auto& e : j.at("elements")) {
            const auto type = e.at("type").get<std::string>();
            const int layer = e.value("layer", 0);
            if (type == "phase_shifter") {
                const auto& b = e.at("binding");
                const auto kind = b.at("kind").get<std::string>();
                PhaseBinding binding = PhaseBinding::constant(0.0);
                if (kind == "constant") {
                    binding = PhaseBinding::constant(b.at("value").get<double>());
                } else if (kind == "linear") {
                    binding = PhaseBinding::linear(b.at("parameter").get<std::string>(),
                                                   b.value("multiplier", 1), b.value("offset", 0.0));
                } else {
                    throw ContractError("unknown binding kind '" + kind + "'");
                }
                c.add_phase(e.at("mode").get<int>(), std::move(binding), layer);
            } else if (type == "beam_splitter") {
                const auto& modes = e.at("modes");
                c.add_beam_splitter(modes.at(0).get<int>(), modes.at(1).get<int>(),
                                    e.value("mixing_angle", std::numbers::pi / 4), layer);
            } else {
                throw ContractError("unknown element type '" + type + "'");
            }
        }
        return c;
    } catch (const json::exception& ex) {
        throw ContractError(std::string("malformed circuit description: ") + ex.what());
    }
}

void save_circuit(const ParametricCircuit& c, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << circuit_to_json(c).dump(2) << '\n';
}

ParametricCircuit load_circuit(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ContractError("cannot open circuit file " + path.string());
    json j;
    try {
        in >> j;
    } catch (const json::exception& ex) {
        throw ContractError("cannot parse " + path.string() + ": " + ex.what());
    }
    return circuit_from_json(j);
}

}  // namespace photonshift
