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

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace photonshift {

using CostFunction = std::function<double(std::span<const double>)>;
using GradientFunction = std::function<std::vector<double>(std::span<const double>)>;

enum class OptimizerStatus { converged, max_iter, line_search_failure };

std::string to_string(OptimizerStatus status);

struct OptimizerOptions {
    int max_iter = 200;
    double grad_tol = 1e-6;
    // strong Wolfe constants
    double c1 = 1e-4;
    double c2 = 0.9;
    int max_line_search = 30;
    double max_step = 1e3;
    /// Consecutive failed line searches tolerated before giving up. Each failure resets
    /// the inverse Hessian to the identity.
    int max_line_search_failures = 3;
    /// Cost and gradient carry sampling noise: when the Wolfe conditions cannot be met,
    /// move to the best trial point of the search if it improves on the current cost.
    bool noisy = false;
    /// Step size of the gradient-descent baseline.
    double learning_rate = 0.1;
};

struct OptimizerIterate {
    int iteration = 0;
    std::vector<double> params;
    double cost = 0.0;
    double grad_norm = 0.0;
    /// Cumulative cost plus gradient evaluations up to this iterate.
    std::uint64_t evaluations = 0;
};

struct OptimizerTrace {
    std::vector<OptimizerIterate> iterates;
    OptimizerStatus status = OptimizerStatus::max_iter;
    std::vector<double> best_params;
    double best_cost = 0.0;
    std::uint64_t evaluations = 0;

    const OptimizerIterate& final() const { return iterates.back(); }
};

/// Quasi-Newton minimisation with the inverse-Hessian BFGS update and a strong Wolfe
/// line search (bracketing then zoom). Iterate 0 is the starting point.
OptimizerTrace bfgs_minimize(const CostFunction& cost, const GradientFunction& grad,
                             std::vector<double> x0, const OptimizerOptions& options = {});

/// Fixed-step steepest descent, kept as a baseline.
OptimizerTrace gradient_descent(const CostFunction& cost, const GradientFunction& grad,
                                std::vector<double> x0, const OptimizerOptions& options = {});

}  // namespace photonshift
