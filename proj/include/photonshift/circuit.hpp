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

#include <cstddef>
#include <map>
#include <numbers>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "photonshift/permanent.hpp"

namespace photonshift {

/// Physical phase as a function of the circuit parameters: either a constant or
/// a * theta + b with integer a != 0.
class PhaseBinding {
   public:
    static PhaseBinding constant(double value);
    static PhaseBinding linear(std::string parameter, int multiplier = 1, double offset = 0.0);

    bool is_constant() const { return parameter_.empty(); }
    const std::string& parameter() const { return parameter_; }
    int multiplier() const { return multiplier_; }
    /// Constant value, or offset b of a linear binding.
    double offset() const { return offset_; }

    friend bool operator==(const PhaseBinding&, const PhaseBinding&) = default;

   private:
    std::string parameter_;
    int multiplier_ = 0;
    double offset_ = 0.0;
};

struct PhaseShifter {
    int mode = 0;
    PhaseBinding binding = PhaseBinding::constant(0.0);
    friend bool operator==(const PhaseShifter&, const PhaseShifter&) = default;
};

/// 2x2 block [[cos t, i sin t], [i sin t, cos t]] on (mode_a, mode_b); t = pi/4 is 50:50.
struct BeamSplitter {
    int mode_a = 0;
    int mode_b = 1;
    double mixing_angle = std::numbers::pi / 4;
    friend bool operator==(const BeamSplitter&, const BeamSplitter&) = default;
};

struct CircuitElement {
    std::variant<PhaseShifter, BeamSplitter> kind;
    int layer = 0;

    bool is_phase() const { return std::holds_alternative<PhaseShifter>(kind); }
    friend bool operator==(const CircuitElement&, const CircuitElement&) = default;
};

struct Parameter {
    std::string name;
    double value = 0.0;
    friend bool operator==(const Parameter&, const Parameter&) = default;
};

using ParameterMap = std::map<std::string, double>;

/// Ordered list of phase shifters and beam splitters on a fixed number of modes. Elements
/// act in list order: the first element is applied to the input first.
class ParametricCircuit {
   public:
    explicit ParametricCircuit(int modes = 0);

    int mode_count() const { return modes_; }
    const std::vector<CircuitElement>& elements() const { return elements_; }
    const std::vector<Parameter>& parameters() const { return parameters_; }
    std::size_t parameter_count() const { return parameters_.size(); }

    /// Declares a parameter and returns its index. Names must be unique.
    std::size_t add_parameter(const std::string& name, double value = 0.0);
    bool has_parameter(const std::string& name) const;
    /// Throws ContractError for unknown names.
    std::size_t parameter_index(const std::string& name) const;

    void set_parameter(const std::string& name, double value);
    void set_parameter_values(std::span<const double> values);
    std::vector<double> parameter_values() const;
    std::vector<std::string> parameter_names() const;

    /// Returns the element index.
    std::size_t add_phase(int mode, PhaseBinding binding, int layer = 0);
    std::size_t add_beam_splitter(int mode_a, int mode_b,
                                  double mixing_angle = std::numbers::pi / 4, int layer = 0);
    /// Appends every element of `other` (same mode count). Parameters of `other` that are
    /// not declared yet are added with their current values.
    void append(const ParametricCircuit& other, int layer_offset = 0);

    /// Phase value of element `index` for the given parameter vector (declaration order).
    double phase_value(std::size_t index, std::span<const double> values) const;

    int layer_count() const;

    friend bool operator==(const ParametricCircuit&, const ParametricCircuit&) = default;

   private:
    void check_mode(int mode) const;
    void check_parameter_values(std::span<const double> values) const;

    int modes_;
    std::vector<CircuitElement> elements_;
    std::vector<Parameter> parameters_;
};

/// Left-multiplies `u` (m x k) by the element's matrix.
void apply_element(ComplexMatrix& u, const CircuitElement& e, double phase);

/// Product of all element matrices at the given parameter vector (declaration order).
ComplexMatrix evaluate_unitary(const ParametricCircuit& c, std::span<const double> values);
/// Every declared parameter must be present in `params` and no other names.
ComplexMatrix evaluate_unitary(const ParametricCircuit& c, const ParameterMap& params);
/// At the circuit's current parameter values.
ComplexMatrix evaluate_unitary(const ParametricCircuit& c);

/// U(phi) = after * Phi_mode(phi) * before for the phase shifter at `element`.
struct PhaseSplit {
    ComplexMatrix before;
    int mode = 0;
    ComplexMatrix after;

    ComplexMatrix reconstruct(double phase) const;
};

PhaseSplit split_at_phase(const ParametricCircuit& c, std::size_t element,
                          std::span<const double> values);
PhaseSplit split_at_phase(const ParametricCircuit& c, std::size_t element);

struct PhaseInstance {
    std::size_t element = 0;
    int multiplier = 0;
    friend bool operator==(const PhaseInstance&, const PhaseInstance&) = default;
};

/// Every phase shifter whose binding references `name`, in element order.
std::vector<PhaseInstance> parameter_phase_instances(const ParametricCircuit& c,
                                                     const std::string& name);

/// Mach-Zehnder cell on (a, b): external phase on a, splitter, internal phase on a,
/// splitter. The internal phase sets the splitting ratio (pi: bar, 0: cross).
void append_mzi(ParametricCircuit& c, int a, int b, PhaseBinding external, PhaseBinding internal,
                int layer = 0);

/// Rectangular mesh of m(m-1)/2 Mach-Zehnder cells. Cell phases are bound, in
/// construction order, to fresh parameters `<prefix>0`, `<prefix>1`, ... (external phase
/// first, then internal). A final layer of constant zero phases stands for the residual
/// output phases of the decomposition.
ParametricCircuit build_clements_mesh(int modes, const std::string& prefix = "theta");

}  // namespace photonshift
