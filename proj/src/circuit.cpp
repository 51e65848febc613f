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

#include "photonshift/circuit.hpp"

#include <algorithm>
#include <cmath>

#include "photonshift/error.hpp"

namespace photonshift {

PhaseBinding PhaseBinding::constant(double value) {
    PhaseBinding b;
    b.offset_ = value;
    return b;
}

PhaseBinding PhaseBinding::linear(std::string parameter, int multiplier, double offset) {
    if (parameter.empty()) throw ContractError("linear binding needs a parameter name");
    if (multiplier == 0) throw ContractError("linear binding multiplier must be non-zero");
    PhaseBinding b;
    b.parameter_ = std::move(parameter);
    b.multiplier_ = multiplier;
    b.offset_ = offset;
    return b;
}

ParametricCircuit::ParametricCircuit(int modes) : modes_(modes) {
    if (modes < 0) throw ContractError("mode count must be non-negative");
}

std::size_t ParametricCircuit::add_parameter(const std::string& name, double value) {
    if (name.empty()) throw ContractError("parameter name must be non-empty");
    if (has_parameter(name)) throw ContractError("parameter '" + name + "' declared twice");
    parameters_.push_back({name, value});
    return parameters_.size() - 1;
}

bool ParametricCircuit::has_parameter(const std::string& name) const {
    return std::any_of(parameters_.begin(), parameters_.end(),
                       [&](const Parameter& p) { return p.name == name; });
}

std::size_t ParametricCircuit::parameter_index(const std::string& name) const {
    for (std::size_t i = 0; i < parameters_.size(); ++i) {
        if (parameters_[i].name == name) return i;
    }
    throw ContractError("unknown parameter '" + name + "'");
}

void ParametricCircuit::set_parameter(const std::string& name, double value) {
    parameters_[parameter_index(name)].value = value;
}

void ParametricCircuit::set_parameter_values(std::span<const double> values) {
    check_parameter_values(values);
    for (std::size_t i = 0; i < values.size(); ++i) parameters_[i].value = values[i];
}

std::vector<double> ParametricCircuit::parameter_values() const {
    std::vector<double> v;
    v.reserve(parameters_.size());
    for (const auto& p : parameters_) v.push_back(p.value);
    return v;
}

std::vector<std::string> ParametricCircuit::parameter_names() const {
    std::vector<std::string> v;
    v.reserve(parameters_.size());
    for (const auto& p : parameters_) v.push_back(p.name);
    return v;
}

void ParametricCircuit::check_mode(int mode) const {
    if (mode < 0 || mode >= modes_) {
        throw ContractError("mode " + std::to_string(mode) + " outside a " +
                            std::to_string(modes_) + "-mode circuit");
    }
}

void ParametricCircuit::check_parameter_values(std::span<const double> values) const {
    if (values.size() != parameters_.size()) {
        throw ContractError("expected " + std::to_string(parameters_.size()) +
                            " parameter values, got " + std::to_string(values.size()));
    }
}

std::size_t ParametricCircuit::add_phase(int mode, PhaseBinding binding, int layer) {
    check_mode(mode);
    if (!binding.is_constant() && !has_parameter(binding.parameter())) {
        throw ContractError("binding references undeclared parameter '" + binding.parameter() +
                            "'");
    }
    elements_.push_back({PhaseShifter{mode, std::move(binding)}, layer});
    return elements_.size() - 1;
}

std::size_t ParametricCircuit::add_beam_splitter(int mode_a, int mode_b, double mixing_angle,
                                                 int layer) {
    check_mode(mode_a);
    check_mode(mode_b);
    if (mode_a == mode_b) throw ContractError("beam splitter modes must differ");
    elements_.push_back({BeamSplitter{mode_a, mode_b, mixing_angle}, layer});
    return elements_.size() - 1;
}

void ParametricCircuit::append(const ParametricCircuit& other, int layer_offset) {
    if (other.modes_ != modes_) throw ContractError("cannot append circuits of different width");
    for (const auto& p : other.parameters_) {
        if (!has_parameter(p.name)) parameters_.push_back(p);
    }
    for (auto e : other.elements_) {
        e.layer += layer_offset;
        elements_.push_back(std::move(e));
    }
}

double ParametricCircuit::phase_value(std::size_t index, std::span<const double> values) const {
    const auto& shifter = std::get<PhaseShifter>(elements_.at(index).kind);
    const PhaseBinding& b = shifter.binding;
    if (b.is_constant()) return b.offset();
    return b.multiplier() * values[parameter_index(b.parameter())] + b.offset();
}

int ParametricCircuit::layer_count() const {
    int layers = 0;
    for (const auto& e : elements_) layers = std::max(layers, e.layer + 1);
    return layers;
}

// ---------------------------------------------------------------------------------------

void apply_element(ComplexMatrix& u, const CircuitElement& e, double phase) {
    if (const auto* ps = std::get_if<PhaseShifter>(&e.kind)) {
        u.row(ps->mode) *= std::polar(1.0, phase);
        return;
    }
    const auto& bs = std::get<BeamSplitter>(e.kind);
    const double c = std::cos(bs.mixing_angle);
    const Complex is(0.0, std::sin(bs.mixing_angle));
    const Eigen::RowVectorXcd a = u.row(bs.mode_a);
    const Eigen::RowVectorXcd b = u.row(bs.mode_b);
    u.row(bs.mode_a) = c * a + is * b;
    u.row(bs.mode_b) = is * a + c * b;
}

namespace {

// Product of elements [first, last) applied to the identity.
ComplexMatrix partial_product(const ParametricCircuit& c, std::size_t first, std::size_t last,
                              std::span<const double> values) {
    ComplexMatrix u = ComplexMatrix::Identity(c.mode_count(), c.mode_count());
    const auto& elements = c.elements();
    for (std::size_t i = first; i < last; ++i) {
        const double phase = elements[i].is_phase() ? c.phase_value(i, values) : 0.0;
        apply_element(u, elements[i], phase);
    }
    return u;
}

}  // namespace

ComplexMatrix evaluate_unitary(const ParametricCircuit& c, std::span<const double> values) {
    if (values.size() != c.parameter_count()) {
        throw ContractError("expected " + std::to_string(c.parameter_count()) +
                            " parameter values, got " + std::to_string(values.size()));
    }
    return partial_product(c, 0, c.elements().size(), values);
}

ComplexMatrix evaluate_unitary(const ParametricCircuit& c, const ParameterMap& params) {
    std::vector<double> values;
    values.reserve(c.parameter_count());
    for (const auto& p : c.parameters()) {
        const auto it = params.find(p.name);
        if (it == params.end()) throw ContractError("unbound parameter '" + p.name + "'");
        values.push_back(it->second);
    }
    for (const auto& [name, value] : params) {
        if (!c.has_parameter(name)) throw ContractError("unknown parameter '" + name + "'");
    }
    return evaluate_unitary(c, values);
}

ComplexMatrix evaluate_unitary(const ParametricCircuit& c) {
    const std::vector<double> values = c.parameter_values();
    return evaluate_unitary(c, values);
}

ComplexMatrix PhaseSplit::reconstruct(double phase) const {
    ComplexMatrix mid = before;
    mid.row(mode) *= std::polar(1.0, phase);
    return after * mid;
}

PhaseSplit split_at_phase(const ParametricCircuit& c, std::size_t element,
                          std::span<const double> values) {
    if (element >= c.elements().size()) throw ContractError("element index out of range");
    const auto* ps = std::get_if<PhaseShifter>(&c.elements()[element].kind);
    if (!ps) throw ContractError("element " + std::to_string(element) + " is not a phase shifter");
    if (values.size() != c.parameter_count()) throw ContractError("wrong parameter count");
    return PhaseSplit{partial_product(c, 0, element, values), ps->mode,
                      partial_product(c, element + 1, c.elements().size(), values)};
}

PhaseSplit split_at_phase(const ParametricCircuit& c, std::size_t element) {
    const std::vector<double> values = c.parameter_values();
    return split_at_phase(c, element, values);
}

std::vector<PhaseInstance> parameter_phase_instances(const ParametricCircuit& c,
                                                     const std::string& name) {
    (void)c.parameter_index(name);  // throws for unknown names
    std::vector<PhaseInstance> result;
    const auto& elements = c.elements();
    for (std::size_t i = 0; i < elements.size(); ++i) {
        const auto* ps = std::get_if<PhaseShifter>(&elements[i].kind);
        if (ps && !ps->binding.is_constant() && ps->binding.parameter() == name) {
            result.push_back({i, ps->binding.multiplier()});
        }
    }
    return result;
}

void append_mzi(ParametricCircuit& c, int a, int b, PhaseBinding external, PhaseBinding internal,
                int layer) {
    c.add_phase(a, std::move(external), layer);
    c.add_beam_splitter(a, b, std::numbers::pi / 4, layer);
    c.add_phase(a, std::move(internal), layer);
    c.add_beam_splitter(a, b, std::numbers::pi / 4, layer);
}

ParametricCircuit build_clements_mesh(int modes, const std::string& prefix) {
    if (modes < 2) throw ContractError("a Clements mesh needs at least 2 modes");
    ParametricCircuit c(modes);
    int next = 0;
    auto fresh = [&] {
        const std::string name = prefix + std::to_string(next++);
        c.add_parameter(name, 0.0);
        return PhaseBinding::linear(name);
    };
    // Layer l holds cells on (k, k+1) for k = l mod 2, l mod 2 + 2, ...; m layers give
    // m(m-1)/2 cells with every adjacent pair met the same number of times.
    for (int layer = 0; layer < modes; ++layer) {
        for (int k = layer % 2; k + 1 < modes; k += 2) {
            PhaseBinding external = fresh();
            PhaseBinding internal = fresh();
            append_mzi(c, k, k + 1, std::move(external), std::move(internal), layer);
        }
    }
    for (int k = 0; k < modes; ++k) c.add_phase(k, PhaseBinding::constant(0.0), modes);
    return c;
}

}  // namespace photonshift
