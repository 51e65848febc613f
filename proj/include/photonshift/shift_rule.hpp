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

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "photonshift/circuit.hpp"
#include "photonshift/degree.hpp"
#include "photonshift/fourier.hpp"

namespace photonshift {

/// Shifted evaluation points and coefficients: f'(x0) = sum_k weights[k] f(x0 + shifts[k]).
struct DerivativeRule {
    int degree = 0;
    std::vector<double> shifts;
    std::vector<double> weights;
};

/// 2R-point rule with shifts (2k-1) pi / (2R) and weights
/// (-1)^(k-1) / (4R sin^2((2k-1) pi / (4R))), k = 1..2R. Exact for degree <= R.
DerivativeRule derivative_rule(int degree);

double shift_derivative(const ScalarFunction& f, double x0, int degree);
double apply_rule(const DerivativeRule& rule, const ScalarFunction& f, double x0);

nlohmann::json rule_to_json(const DerivativeRule& rule);

using Observable = std::function<double(std::span<const double>)>;

/// Partial derivatives of `observable` with respect to the named circuit parameters at
/// `values` (declaration order). Each parameter uses the rule of its degree; degree 0
/// means the observable does not depend on the parameter and yields an exact 0.
/// Total observable evaluations: sum of 2 R_i.
std::vector<double> gradient(const ParametricCircuit& c, const Observable& observable,
                             std::span<const double> values, const std::vector<std::string>& names,
                             std::span<const int> degrees);

std::vector<double> gradient(const ParametricCircuit& c, const Observable& observable,
                             std::span<const double> values, const std::vector<std::string>& names,
                             const std::vector<DegreeReport>& degrees);

}  // namespace photonshift
