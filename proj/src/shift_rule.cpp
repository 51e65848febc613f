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

#include "photonshift/shift_rule.hpp"

#include <cmath>
#include <numbers>

#include "photonshift/error.hpp"

namespace photonshift {

DerivativeRule derivative_rule(int degree) {
    if (degree <= 0) throw ContractError("shift rule degree must be positive");
    DerivativeRule rule;
    rule.degree = degree;
    const double r = degree;
    for (int k = 1; k <= 2 * degree; ++k) {
        const double shift = (2 * k - 1) * std::numbers::pi / (2 * r);
        rule.shifts.push_back(shift);
        if (k > degree) {
            // node 2R+1-k sits at -shift (mod 2 pi) with the opposite weight; copy it
            // exactly so that constants cancel without round-off
            rule.weights.push_back(-rule.weights[2 * degree - k]);
            continue;
        }
        const double s = std::sin((2 * k - 1) * std::numbers::pi / (4 * r));
        const double sign = (k % 2 == 1) ? 1.0 : -1.0;
        rule.weights.push_back(sign / (4 * r * s * s));
    }
    return rule;
}

double apply_rule(const DerivativeRule& rule, const ScalarFunction& f, double x0) {
    // pair node k with its mirror 2R+1-k
    const std::size_t n = rule.shifts.size();
    double sum = 0.0;
    for (std::size_t k = 0; k < n / 2; ++k) {
        sum += rule.weights[k] * f(x0 + rule.shifts[k]) + rule.weights[n - 1 - k] * f(x0 + rule.shifts[n - 1 - k]);
    }
    return sum;
}

double shift_derivative(const ScalarFunction& f, double x0, int degree) {
    return apply_rule(derivative_rule(degree), f, x0);
}

nlohmann::json rule_to_json(const DerivativeRule& rule) {
    return {{"kind", "derivative"}, {"R", rule.degree}, {"abscissae", rule.shifts}, {"weights", rule.weights}};
}

std::vector<double> gradient(const ParametricCircuit& c, const Observable& observable,
                             std::span<const double> values, const std::vector<std::string>& names,
                             std::span<const int> degrees) {
    if (names.size() != degrees.size()) throw ContractError("one degree per parameter required");
    if (values.size() != c.parameter_count()) throw ContractError("wrong parameter count");
    std::vector<double> point(values.begin(), values.end());
    std::vector<double> result;
    result.reserve(names.size());
    for (std::size_t i = 0; i < names.size(); ++i) {
        const std::size_t index = c.parameter_index(names[i]);
        if (degrees[i] < 0) throw ContractError("negative degree");
        if (degrees[i] == 0) {
            result.push_back(0.0);
            continue;
        }
        const double x0 = point[index];
        const auto restricted = [&](double x) {
            point[index] = x;
            const double v = observable(point);
            point[index] = x0;
            return v;
        };
        result.push_back(shift_derivative(restricted, x0, degrees[i]));
    }
    return result;
}

std::vector<double> gradient(const ParametricCircuit& c, const Observable& observable,
                             std::span<const double> values, const std::vector<std::string>& names,
                             const std::vector<DegreeReport>& degrees) {
    std::vector<int> r;
    r.reserve(degrees.size());
    for (const auto& d : degrees) r.push_back(d.degree);
    return gradient(c, observable, values, names, r);
}

}  // namespace photonshift
