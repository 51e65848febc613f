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

#include "photonshift/vqe.hpp"

#include <Eigen/Eigenvalues>
#include <numbers>
#include <random>

#include "photonshift/error.hpp"
#include "photonshift/parallel.hpp"
#include "photonshift/random.hpp"
#include "photonshift/shift_rule.hpp"

namespace photonshift {

PauliHamiltonian PauliHamiltonian::hydrogen() {
    return {.alpha = -0.340, .beta = 0.394, .gamma = 0.394, .delta = 0.011, .mu = -0.181};
}

Eigen::Matrix4d hamiltonian_matrix(const PauliHamiltonian& h) {
    // ZI reads the first digit pair (13, 23 vs 14, 24) as in the measurement table
    Eigen::Matrix4d m = Eigen::Matrix4d::Zero();
    m(0, 0) = h.alpha + h.beta + h.gamma + h.delta;
    m(1, 1) = h.alpha - h.beta + h.gamma - h.delta;
    m(2, 2) = h.alpha + h.beta - h.gamma - h.delta;
    m(3, 3) = h.alpha - h.beta - h.gamma + h.delta;
    // XX flips both qubits: 13 <-> 24, 14 <-> 23
    m(0, 3) = m(3, 0) = h.mu;
    m(1, 2) = m(2, 1) = h.mu;
    return m;
}

double ground_energy(const PauliHamiltonian& h) {
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> solver(hamiltonian_matrix(h));
    return solver.eigenvalues()(0);
}

const std::array<OccupationList, 4>& DualRailLayout::outcomes() {
    static const std::array<OccupationList, 4> list{
        OccupationList{1, 0, 1, 0}, OccupationList{1, 0, 0, 1}, OccupationList{0, 1, 1, 0},
        OccupationList{0, 1, 0, 1}};
    return list;
}

const std::array<std::string, 4>& DualRailLayout::labels() {
    static const std::array<std::string, 4> list{"13", "14", "23", "24"};
    return list;
}

bool DualRailLayout::keep(const OccupationList& s) {
    return s.mode_count() == 4 && s[0] + s[1] == 1 && s[2] + s[3] == 1;
}

DualRailCounts dual_rail_counts(const CountRecord& counts) {
    DualRailCounts n{};
    for (std::size_t i = 0; i < 4; ++i) {
        n[i] = static_cast<double>(counts.count(DualRailLayout::outcomes()[i]));
    }
    return n;
}

DualRailCounts dual_rail_counts(const ComplexMatrix& u, const OccupationList& input) {
    DualRailCounts n{};
    for (std::size_t i = 0; i < 4; ++i) {
        n[i] = transition_probability(u, input, DualRailLayout::outcomes()[i]);
    }
    return n;
}

namespace {

constexpr std::array<double, 4> kZi{1, -1, 1, -1};
constexpr std::array<double, 4> kIz{1, 1, -1, -1};
constexpr std::array<double, 4> kZz{1, -1, -1, 1};

double total(const DualRailCounts& n) { return n[0] + n[1] + n[2] + n[3]; }

double combine(const std::array<double, 4>& signs, const DualRailCounts& n, double s) {
    double v = 0.0;
    for (std::size_t i = 0; i < 4; ++i) v += signs[i] * n[i];
    return v / s;
}

double checked_total(const DualRailCounts& n) {
    const double s = total(n);
    if (!(s > 0.0)) throw StarvationError("no event survived dual-rail post-selection");
    return s;
}

}  // namespace

PauliExpectations pauli_expectations(const DualRailCounts& z) {
    const double s = checked_total(z);
    PauliExpectations e;
    e.zi = combine(kZi, z, s);
    e.iz = combine(kIz, z, s);
    e.zz = combine(kZz, z, s);
    return e;
}

PauliExpectations pauli_expectations(const DualRailCounts& z, const DualRailCounts& x) {
    PauliExpectations e = pauli_expectations(z);
    e.xx = combine(kZz, x, checked_total(x));
    return e;
}

PauliExpectations pauli_expectations(const CountRecord& z, const CountRecord& x) {
    return pauli_expectations(dual_rail_counts(z), dual_rail_counts(x));
}

double energy(const PauliHamiltonian& h, const PauliExpectations& e) {
    return h.alpha * e.ii + h.beta * e.zi + h.gamma * e.iz + h.delta * e.zz + h.mu * e.xx;
}

ParametricCircuit vqe_ansatz(int variational) {
    const ParametricCircuit mesh = build_clements_mesh(4, "theta");
    if (variational < 0 || static_cast<std::size_t>(variational) > mesh.parameter_count()) {
        throw ContractError("variational phase count out of range");
    }
    ParametricCircuit c(4);
    for (int i = 0; i < variational; ++i) c.add_parameter(mesh.parameters()[static_cast<std::size_t>(i)].name, 0.0);
    for (const auto& e : mesh.elements()) {
        if (const auto* bs = std::get_if<BeamSplitter>(&e.kind)) {
            c.add_beam_splitter(bs->mode_a, bs->mode_b, bs->mixing_angle, e.layer);
            continue;
        }
        const auto& ps = std::get<PhaseShifter>(e.kind);
        if (!ps.binding.is_constant() && c.has_parameter(ps.binding.parameter())) {
            c.add_phase(ps.mode, ps.binding, e.layer);
        } else {
            c.add_phase(ps.mode, PhaseBinding::constant(ps.binding.offset()), e.layer);
        }
    }
    return c;
}

ParametricCircuit x_basis_layer() {
    // A bare symmetric splitter maps the pair onto the Y eigenbasis; the pi/2 phase
    // rotates it onto X.
    ParametricCircuit c(4);
    c.add_phase(0, PhaseBinding::constant(std::numbers::pi / 2), 0);
    c.add_phase(2, PhaseBinding::constant(std::numbers::pi / 2), 0);
    c.add_beam_splitter(0, 1, std::numbers::pi / 4, 1);
    c.add_beam_splitter(2, 3, std::numbers::pi / 4, 1);
    return c;
}

VqeProblem make_vqe_problem(const PauliHamiltonian& h, int variational) {
    VqeProblem p;
    p.ansatz = vqe_ansatz(variational);
    p.x_basis_layer = x_basis_layer();
    p.hamiltonian = h;
    return p;
}

std::array<DualRailCounts, 2> vqe_counts(const VqeProblem& p, std::span<const double> params,
                                         const std::optional<ShotOptions>& shots,
                                         std::uint64_t stream) {
    const ComplexMatrix u = evaluate_unitary(p.ansatz, params);
    const ComplexMatrix ux = evaluate_unitary(p.x_basis_layer, std::span<const double>{}) * u;
    if (!shots) return {dual_rail_counts(u, p.input), dual_rail_counts(ux, p.input)};
    const auto draw = [&](const ComplexMatrix& m, std::string_view basis) {
        const auto dist = output_distribution(m, p.input);
        return dual_rail_counts(
            sample_counts(dist, shots->shots, derive_seed(shots->seed, basis, stream), shots->noise));
    };
    return {draw(u, "z"), draw(ux, "x")};
}

double vqe_energy(const VqeProblem& p, std::span<const double> params,
                  const std::optional<ShotOptions>& shots) {
    const auto n = vqe_counts(p, params, shots, 0);
    return energy(p.hamiltonian, pauli_expectations(n[0], n[1]));
}

std::vector<double> vqe_gradient(const VqeProblem& p, std::span<const double> params,
                                 const std::optional<ShotOptions>& shots) {
    if (params.size() != p.ansatz.parameter_count()) throw ContractError("wrong parameter count");
    const PauliHamiltonian& h = p.hamiltonian;
    // E = alpha + sum_ij cz_ij P^z_ij + sum_ij cx_ij P^x_ij
    std::array<std::array<double, 4>, 2> coeff{};
    for (std::size_t i = 0; i < 4; ++i) {
        coeff[0][i] = h.beta * kZi[i] + h.gamma * kIz[i] + h.delta * kZz[i];
        coeff[1][i] = h.mu * kZz[i];
    }

    const auto base = vqe_counts(p, params, shots, 0);
    std::array<double, 2> s{checked_total(base[0]), checked_total(base[1])};

    std::vector<double> grad(params.size(), 0.0);
    if (p.count_degree <= 0) return grad;
    const DerivativeRule rule = derivative_rule(p.count_degree);
    std::vector<double> point(params.begin(), params.end());
    std::uint64_t stream = 1;
    for (std::size_t k = 0; k < params.size(); ++k) {
        std::array<DualRailCounts, 2> dn{};
        for (std::size_t node = 0; node < rule.shifts.size(); ++node) {
            point[k] = params[k] + rule.shifts[node];
            const auto n = vqe_counts(p, point, shots, stream++);
            for (std::size_t b = 0; b < 2; ++b) {
                for (std::size_t i = 0; i < 4; ++i) dn[b][i] += rule.weights[node] * n[b][i];
            }
        }
        point[k] = params[k];
        double g = 0.0;
        for (std::size_t b = 0; b < 2; ++b) {
            const double ds = total(dn[b]);
            for (std::size_t i = 0; i < 4; ++i) {
                const double dp = dn[b][i] / s[b] - base[b][i] * ds / (s[b] * s[b]);
                g += coeff[b][i] * dp;
            }
        }
        grad[k] = g;
    }
    return grad;
}

std::vector<double> random_phases(std::size_t count, std::uint64_t seed, std::string_view stream,
                                  std::uint64_t index) {
    Rng rng = make_rng(seed, stream, index);
    std::uniform_real_distribution<double> phase(0.0, 2.0 * std::numbers::pi);
    std::vector<double> x(count);
    for (auto& v : x) v = phase(rng);
    return x;
}

MultiStartResult run_vqe(const VqeProblem& p, std::uint64_t seed, const MultiStartOptions& options) {
    if (options.starts < 1) throw ContractError("at least one start required");
    const std::size_t n = p.ansatz.parameter_count();
    OptimizerOptions opt = options.optimizer;
    opt.noisy = opt.noisy || options.shots.has_value();

    MultiStartResult out;
    out.starts = parallel_map(static_cast<std::size_t>(options.starts), options.threads, [&](std::size_t i) {
        const std::uint64_t start_seed = derive_seed(seed, "start", i);
        StartResult r;
        r.initial = random_phases(n, start_seed, "init", 0);
        std::uint64_t evaluation = 0;
        const auto shots_for = [&]() -> std::optional<ShotOptions> {
            if (!options.shots) return std::nullopt;
            return ShotOptions{*options.shots, derive_seed(start_seed, "eval", evaluation++)};
        };
        r.trace = bfgs_minimize([&](std::span<const double> x) { return vqe_energy(p, x, shots_for()); },
                                [&](std::span<const double> x) { return vqe_gradient(p, x, shots_for()); },
                                r.initial, opt);
        r.exact_cost = vqe_energy(p, r.trace.final().params);
        return r;
    });
    for (std::size_t i = 1; i < out.starts.size(); ++i) {
        if (out.starts[i].trace.final().cost < out.starts[out.best].trace.final().cost) out.best = i;
    }
    const auto& best = out.starts[out.best];
    out.exact_cost = best.exact_cost;
    out.cost = options.shots ? vqe_energy(p, best.trace.final().params,
                                          ShotOptions{*options.shots, derive_seed(seed, "remeasure", 0)})
                             : best.trace.final().cost;
    return out;
}

}  // namespace photonshift
