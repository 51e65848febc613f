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
#include <string>
#include <vector>

#include "json.hpp"
#include "photonshift/fourier.hpp"

namespace photonshift {

/// Periodic weight g on [-pi, pi] with its declared parity.
class Weight {
   public:
    enum class Kind { uniform, abs_sin_quarter, odd, even, general };

    /// g = 1 / (2 pi).
    static Weight uniform();
    /// g = |sin x| / 4, the polar-angle density of the Bloch sphere extended to [0, 2 pi).
    static Weight abs_sin_quarter();
    static Weight odd(ScalarFunction g);
    static Weight even(ScalarFunction g);
    static Weight general(ScalarFunction g);

    Kind kind() const { return kind_; }
    double operator()(double x) const;

   private:
    Weight(Kind kind, ScalarFunction g) : kind_(kind), g_(std::move(g)) {}
    Kind kind_;
    ScalarFunction g_;
};

/// C = sum_k weights[k] f(abscissae[k]) = integral_{-pi}^{pi} f(x) g(x) dx for every f of
/// Fourier degree <= R.
struct IntegralRule {
    enum class Kind { general, odd_weight, even_weight, uniform_mean };

    Kind kind = Kind::general;
    int degree = 0;
    std::vector<double> abscissae;
    std::vector<double> weights;
    /// Kernel-weighted integrals c_k of g, one per distinct node (R for the odd rule,
    /// 2R for even and uniform, 2R + 1 for the general rule).
    std::vector<double> coefficients;
};

std::string to_string(IntegralRule::Kind kind);

/// Builds the rule for `weight` at degree R >= 1.
///   general:      nodes 2k pi/(2R+1), k = 0..2R, weights (-1)^k c_k / (2R+1)
///   odd weight:   nodes +-(2k-1) pi/(2R), k = 1..R, weights +-(-1)^k c_k / (2R)
///   even weight:  nodes k pi/R, k = 0..2R-1, weights (-1)^k c_k / (2R)
///   uniform mean: nodes k pi/R, weights 1/(2R)
/// Throws ContractError when a declared parity does not match g numerically.
IntegralRule integral_rule(const Weight& weight, int degree);

double integrate(const ScalarFunction& f, const IntegralRule& rule);

/// Tensor product of two rules for a function of two variables.
double integrate(const std::function<double(double, double)>& f, const IntegralRule& first,
                 const IntegralRule& second);

nlohmann::json rule_to_json(const IntegralRule& rule);

}  // namespace photonshift
