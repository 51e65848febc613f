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

#include "photonshift/unot.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "photonshift/degree.hpp"
#include "photonshift/distribution.hpp"
#include "photonshift/error.hpp"
#include "photonshift/parallel.hpp"
#include "photonshift/integral_rule.hpp"
#include "photonshift/random.hpp"
#include "photonshift/shift_rule.hpp"

namespace photonshift {

namespace {

constexpr double kPi = std::numbers::pi;

}  // namespace

ParametricCircuit unot_block() {
    ParametricCircuit c(3);
    for (int i = 1; i <= 5; ++i) c.add_parameter("u" + std::to_string(i), 0.0);
    append_mzi(c, 0, 1, PhaseBinding::constant(0.0), PhaseBinding::linear("u1"), 0);
    append_mzi(c, 1, 2, PhaseBinding::linear("u2"), PhaseBinding::linear("u3"), 1);
    append_mzi(c, 0, 1, PhaseBinding::linear("u4"), PhaseBinding::linear("u5"), 2);
    return c;
}

UnotProblem make_unot_problem() {
    UnotProblem p;
    ParametricCircuit c(3);
    c.add_parameter("theta_p", 0.0);
    c.add_parameter("phi_p", 0.0);
    c.add_beam_splitter(0, 1, kPi / 4, 0);
    c.add_phase(1, PhaseBinding::linear("theta_p"), 0);
    c.add_beam_splitter(0, 1, kPi / 4, 0);
    c.add_phase(0, PhaseBinding::linear("phi_p"), 0);

    c.append(unot_block(), 1);

    c.add_phase(0, PhaseBinding::linear("phi_p", -1, kPi), 4);
    c.add_beam_splitter(0, 1, kPi / 4, 4);
    c.add_phase(1, PhaseBinding::linear("theta_p", -1, kPi), 4);
    c.add_phase(1, PhaseBinding::constant(kPi), 4);
    c.add_beam_splitter(0, 1, kPi / 4, 4);

    p.circuit = std::move(c);
    for (int i = 1; i <= 5; ++i) p.variational.push_back("u" + std::to_string(i));
    return p;
}

const std::array<BlochAngles, 6>& unot_cost_points() {
    static const std::array<BlochAngles, 6> q{BlochAngles{0, 0},          BlochAngles{kPi / 2, 0},
                                              BlochAngles{kPi / 2, kPi / 2}, BlochAngles{kPi / 2, kPi},
                                              BlochAngles{kPi / 2, 3 * kPi / 2}, BlochAngles{kPi, 0}};
    return q;
}

namespace {

std::vector<double> full_values(const UnotProblem& p, std::span<const double> theta,
                                const BlochAngles& state) {
    if (theta.size() != p.variational.size()) throw ContractError("wrong number of gate phases");
    std::vector<double> values = p.circuit.parameter_values();
    values[p.circuit.parameter_index("theta_p")] = state.theta;
    values[p.circuit.parameter_index("phi_p")] = state.phi;
    for (std::size_t i = 0; i < theta.size(); ++i) {
        values[p.circuit.parameter_index(p.variational[i])] = theta[i];
    }
    return values;
}

double detection(const UnotProblem& p, std::span<const double> values,
                 const std::optional<ShotOptions>& shots, std::uint64_t stream) {
    const ComplexMatrix u = evaluate_unitary(p.circuit, values);
    if (!shots) return transition_probability(u, p.input, p.detect);
    const auto counts = sample_counts(output_distribution(u, p.input), shots->shots,
                                      derive_seed(shots->seed, "unot", stream), shots->noise);
    return static_cast<double>(counts.count(p.detect)) / static_cast<double>(counts.total_shots);
}

}  // namespace

double unot_detection_probability(const UnotProblem& p, std::span<const double> theta,
                                  const BlochAngles& state) {
    const auto values = full_values(p, theta, state);
    return detection(p, values, std::nullopt, 0);
}

double unot_success_probability(const UnotProblem& p, std::span<const double> theta,
                                const BlochAngles& state) {
    const ComplexMatrix u = evaluate_unitary(p.circuit, full_values(p, theta, state));
    double lost = 0.0;
    for (Eigen::Index j = 0; j < u.cols(); ++j) {
        if (p.input[static_cast<std::size_t>(j)] > 0) lost += std::norm(u(2, j));
    }
    return 1.0 - lost;
}

double unot_cost(const UnotProblem& p, std::span<const double> theta,
                 const std::optional<ShotOptions>& shots) {
    double sum = 0.0;
    std::uint64_t stream = 0;
    for (const auto& q : unot_cost_points()) {
        const auto values = full_values(p, theta, q);
        sum += detection(p, values, shots, stream++);
    }
    return -sum / 6.0;
}

double unot_cost_tensor(const UnotProblem& p, std::span<const double> theta) {
    const IntegralRule polar = integral_rule(Weight::abs_sin_quarter(), 2);
    const IntegralRule azimuth = integral_rule(Weight::uniform(), 2);
    return -integrate(
        [&](double t, double f) { return unot_detection_probability(p, theta, {t, f}); }, polar,
        azimuth);
}

std::vector<int> unot_degrees(const UnotProblem& p, std::span<const double> theta) {
    std::vector<int> degrees(p.variational.size(), 0);
    for (const auto& q : unot_cost_points()) {
        const auto values = full_values(p, theta, q);
        for (std::size_t i = 0; i < p.variational.size(); ++i) {
            const auto report = parameter_degree(p.circuit, p.variational[i], p.input, p.detect, values);
            degrees[i] = std::max(degrees[i], report.degree);
        }
    }
    for (auto& d : degrees) {
        if (d > 0) d = std::max(0, d + p.degree_offset);
    }
    return degrees;
}

std::vector<double> unot_gradient(const UnotProblem& p, std::span<const double> theta,
                                  const std::optional<ShotOptions>& shots) {
    const auto degrees = unot_degrees(p, theta);
    std::vector<double> grad(theta.size(), 0.0);
    std::uint64_t stream = 0;
    for (std::size_t i = 0; i < theta.size(); ++i) {
        if (degrees[i] == 0) continue;
        const std::size_t index = p.circuit.parameter_index(p.variational[i]);
        const DerivativeRule rule = derivative_rule(degrees[i]);
        double g = 0.0;
        for (const auto& q : unot_cost_points()) {
            auto values = full_values(p, theta, q);
            for (std::size_t n = 0; n < rule.shifts.size(); ++n) {
                values[index] = theta[i] + rule.shifts[n];
                g += rule.weights[n] * detection(p, values, shots, stream++);
            }
        }
        grad[i] = -g / 6.0;
    }
    return grad;
}

FidelityTest unot_fidelity_test(const UnotProblem& p, std::span<const double> theta,
                                std::size_t n_states, std::uint64_t seed, int bins) {
    if (n_states < 1) throw ContractError("fidelity test needs at least one state");
    if (bins < 1) throw ContractError("histogram needs at least one bin");
    Rng rng = make_rng(seed, "unot/fidelity");
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    FidelityTest out;
    out.fidelities.reserve(n_states);
    for (std::size_t i = 0; i < n_states; ++i) {
        // uniform on the sphere: cos(theta) uniform in [-1, 1]
        const double t = std::acos(1.0 - 2.0 * unit(rng));
        const double f = 2.0 * kPi * unit(rng);
        const double success = unot_success_probability(p, theta, {t, f});
        const double fid = success > 1e-15 ? unot_detection_probability(p, theta, {t, f}) / success : 0.0;
        out.fidelities.push_back(std::clamp(fid, 0.0, 1.0));
    }
    double sum = 0.0;
    for (double v : out.fidelities) sum += v;
    out.mean = sum / static_cast<double>(n_states);
    if (n_states > 1) {
        double sq = 0.0;
        for (double v : out.fidelities) sq += (v - out.mean) * (v - out.mean);
        out.standard_error = std::sqrt(sq / static_cast<double>(n_states - 1) / static_cast<double>(n_states));
    }
    out.histogram.assign(static_cast<std::size_t>(bins), 0);
    for (int b = 0; b <= bins; ++b) out.bin_edges.push_back(static_cast<double>(b) / bins);
    for (double v : out.fidelities) {
        const auto b = std::min(static_cast<std::size_t>(v * bins), static_cast<std::size_t>(bins - 1));
        ++out.histogram[b];
    }
    return out;
}

MultiStartResult run_unot(const UnotProblem& p, std::uint64_t seed, const MultiStartOptions& options) {
    if (options.starts < 1) throw ContractError("at least one start required");
    OptimizerOptions opt = options.optimizer;
    opt.noisy = opt.noisy || options.shots.has_value();

    MultiStartResult out;
    out.starts = parallel_map(static_cast<std::size_t>(options.starts), options.threads, [&](std::size_t i) {
        const std::uint64_t start_seed = derive_seed(seed, "start", i);
        StartResult r;
        r.initial = random_phases(p.variational.size(), start_seed, "init", 0);
        std::uint64_t evaluation = 0;
        const auto shots_for = [&]() -> std::optional<ShotOptions> {
            if (!options.shots) return std::nullopt;
            return ShotOptions{*options.shots, derive_seed(start_seed, "eval", evaluation++)};
        };
        r.trace = bfgs_minimize([&](std::span<const double> x) { return unot_cost(p, x, shots_for()); },
                                [&](std::span<const double> x) { return unot_gradient(p, x, shots_for()); },
                                r.initial, opt);
        r.exact_cost = unot_cost(p, r.trace.final().params);
        return r;
    });
    for (std::size_t i = 1; i < out.starts.size(); ++i) {
        if (out.starts[i].trace.final().cost < out.starts[out.best].trace.final().cost) out.best = i;
    }
    const auto& best = out.starts[out.best];
    out.exact_cost = best.exact_cost;
    out.cost = options.shots ? unot_cost(p, best.trace.final().params,
                                         ShotOptions{*options.shots, derive_seed(seed, "remeasure", 0)})
                             : best.trace.final().cost;
    return out;
}

}  // namespace photonshift
