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

#include <gtest/gtest.h>

#include <atomic>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "../support.hpp"
#include "photonshift/error.hpp"
#include "photonshift/optimizer.hpp"
#include "photonshift/parallel.hpp"
#include "photonshift/random.hpp"
#include "photonshift/unot.hpp"
#include "photonshift/vqe.hpp"

namespace photonshift {
namespace {

constexpr double kPi = std::numbers::pi;
using Matrix4c = Eigen::Matrix4cd;

std::vector<double> random_values(std::size_t n, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(0.0, 2 * kPi);
    std::vector<double> v(n);
    for (auto& x : v) x = u(rng);
    return v;
}

double norm(const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
}

template <class F>
std::vector<double> central_difference(F&& f, const std::vector<double>& x, double h = 1e-6) {
    std::vector<double> g(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        auto hi = x, lo = x;
        hi[i] += h;
        lo[i] -= h;
        g[i] = (f(hi) - f(lo)) / (2 * h);
    }
    return g;
}

// Two-qubit Hamiltonian from Kronecker products, basis |q1 q2> with q1 on modes (0,1).
// The measurement table sign patterns make ZI flip with the second digit of the outcome
// label and IZ with the first.
Matrix4c kron_hamiltonian(const PauliHamiltonian& h) {
    Eigen::Matrix2cd i2 = Eigen::Matrix2cd::Identity(), z, x;
    z << 1, 0, 0, -1;
    x << 0, 1, 1, 0;
    const auto kron = [](const Eigen::Matrix2cd& a, const Eigen::Matrix2cd& b) {
        Matrix4c k;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) k.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
        return k;
    };
    return h.alpha * kron(i2, i2) + h.beta * kron(i2, z) + h.gamma * kron(z, i2) + h.delta * kron(z, z) +
           h.mu * kron(x, x);
}

// Post-selected two-qubit state read from the permanent amplitudes of the four kept outcomes.
Eigen::Vector4cd logical_state(const ComplexMatrix& u) {
    Eigen::Vector4cd psi;
    for (int k = 0; k < 4; ++k) {
        psi(k) = permanent(scattering_matrix(u, DualRailLayout::logical_zero_zero(), DualRailLayout::outcomes()[k]));
    }
    return psi / psi.norm();
}

TEST(Pauli, ExpectationExamples) {
    auto e = pauli_expectations(DualRailCounts{100, 0, 0, 0});
    EXPECT_EQ(e.ii, 1.0);
    EXPECT_EQ(e.zi, 1.0);
    EXPECT_EQ(e.iz, 1.0);
    EXPECT_EQ(e.zz, 1.0);
    e = pauli_expectations(DualRailCounts{7, 7, 7, 7});
    EXPECT_EQ(e.zi, 0.0);
    EXPECT_EQ(e.iz, 0.0);
    EXPECT_EQ(e.zz, 0.0);
    e = pauli_expectations(DualRailCounts{0, 50, 50, 0});
    EXPECT_EQ(e.zz, -1.0);
    EXPECT_EQ(e.zi, 0.0);
    EXPECT_EQ(e.iz, 0.0);
    e = pauli_expectations(DualRailCounts{1, 2, 3, 4}, DualRailCounts{0, 0, 0, 5});
    EXPECT_NEAR(e.zi, (1 - 2 + 3 - 4) / 10.0, 1e-15);
    EXPECT_NEAR(e.iz, (1 + 2 - 3 - 4) / 10.0, 1e-15);
    EXPECT_EQ(e.xx, 1.0);
    EXPECT_THROW(pauli_expectations(DualRailCounts{0, 0, 0, 0}), StarvationError);
    EXPECT_THROW(pauli_expectations(DualRailCounts{1, 0, 0, 0}, DualRailCounts{0, 0, 0, 0}), StarvationError);
}

TEST(Pauli, DualRailLayout) {
    const auto& o = DualRailLayout::outcomes();
    EXPECT_EQ(o[0], (OccupationList{1, 0, 1, 0}));
    EXPECT_EQ(o[1], (OccupationList{1, 0, 0, 1}));
    EXPECT_EQ(o[2], (OccupationList{0, 1, 1, 0}));
    EXPECT_EQ(o[3], (OccupationList{0, 1, 0, 1}));
    EXPECT_EQ(DualRailLayout::labels()[1], "14");
    int kept = 0;
    for (const auto& s : enumerate_occupations(4, 2)) kept += DualRailLayout::keep(s) ? 1 : 0;
    EXPECT_EQ(kept, 4);
}

TEST(Vqe, HamiltonianMatchesKroneckerOracle) {
    std::mt19937_64 rng(79);
    std::uniform_real_distribution<double> c(-1.0, 1.0);
    for (int t = 0; t < 10; ++t) {
        const PauliHamiltonian h{c(rng), c(rng), c(rng), c(rng), c(rng)};
        const Matrix4c k = kron_hamiltonian(h);
        EXPECT_LT((hamiltonian_matrix(h).cast<Complex>() - k).cwiseAbs().maxCoeff(), 1e-15);
        Eigen::SelfAdjointEigenSolver<Matrix4c> solver(k);
        EXPECT_NEAR(ground_energy(h), solver.eigenvalues()(0), 1e-12);
    }
    EXPECT_NEAR(ground_energy(PauliHamiltonian::hydrogen()), -1.1375, 5e-5);
}

TEST(Vqe, EmptyPreparationGivesDiagonalEntry) {
    const PauliHamiltonian h{-0.3, 0.2, 0.1, 0.05, 0.0};
    VqeProblem p = make_vqe_problem(h, 0);
    p.ansatz = ParametricCircuit(4);
    EXPECT_NEAR(vqe_energy(p, {}), h.alpha + h.beta + h.gamma + h.delta, 1e-15);
}

TEST(Vqe, EnergyMatchesStateVectorOracle) {
    std::mt19937_64 rng(83);
    const VqeProblem p = make_vqe_problem();
    const Matrix4c h = kron_hamiltonian(p.hamiltonian);
    for (int t = 0; t < 20; ++t) {
        const auto v = random_values(9, rng);
        const Eigen::Vector4cd psi = logical_state(evaluate_unitary(p.ansatz, v));
        const double want = (psi.adjoint() * h * psi)(0).real();
        EXPECT_NEAR(vqe_energy(p, v), want, 1e-12);
    }
}

TEST(Vqe, EnergySandwich) {
    std::mt19937_64 rng(89);
    const VqeProblem p = make_vqe_problem();
    const double e0 = ground_energy(p.hamiltonian);
    for (int t = 0; t < 200; ++t) EXPECT_GE(vqe_energy(p, random_values(9, rng)), e0 - 1e-9);
}

TEST(Vqe, GradientMatchesFiniteDifferences) {
    std::mt19937_64 rng(97);
    const VqeProblem p = make_vqe_problem();
    for (int t = 0; t < 50; ++t) {
        const auto v = random_values(9, rng);
        const auto g = vqe_gradient(p, v);
        const auto fd = central_difference([&](const std::vector<double>& x) { return vqe_energy(p, x); }, v);
        ASSERT_EQ(g.size(), 9u);
        for (std::size_t i = 0; i < 9; ++i) EXPECT_NEAR(g[i], fd[i], 1e-6) << "point " << t << " component " << i;
    }
}

TEST(Vqe, ZeroHamiltonianHasZeroGradient) {
    std::mt19937_64 rng(101);
    const VqeProblem p = make_vqe_problem(PauliHamiltonian{});
    for (double g : vqe_gradient(p, random_values(9, rng))) EXPECT_EQ(g, 0.0);
}

TEST(Vqe, NoiselessMultiStartReachesGroundEnergy) {
    const VqeProblem p = make_vqe_problem();
    MultiStartOptions opts;
    opts.starts = 20;
    const auto result = run_vqe(p, 2026, opts);
    const double e0 = ground_energy(p.hamiltonian);
    EXPECT_NEAR(result.cost, e0, 1e-3);
    EXPECT_LE(result.cost, -1.136);
    const auto& best = result.starts[result.best].trace;
    EXPECT_LE(norm(vqe_gradient(p, best.final().params)), 1e-4);
    EXPECT_EQ(result.starts.size(), 20u);
}

TEST(Vqe, ShotNoiseIsUnbiasedAndSeeded) {
    std::mt19937_64 rng(103);
    const VqeProblem p = make_vqe_problem();
    const auto v = random_values(9, rng);
    const double exact = vqe_energy(p, v);
    constexpr int kRepeats = 40;
    double sum = 0.0, sq = 0.0;
    for (int r = 0; r < kRepeats; ++r) {
        const double e = vqe_energy(p, v, ShotOptions{10'000, derive_seed(7, "repeat", r)});
        sum += e;
        sq += e * e;
    }
    const double mean = sum / kRepeats;
    const double sd = std::sqrt((sq - kRepeats * mean * mean) / (kRepeats - 1));
    EXPECT_GT(sd, 0.0);
    EXPECT_LT(std::abs(mean - exact), 5 * sd / std::sqrt(double(kRepeats)));

    const ShotOptions s{10'000, 5};
    EXPECT_EQ(vqe_energy(p, v, s), vqe_energy(p, v, s));
    EXPECT_EQ(vqe_gradient(p, v, s), vqe_gradient(p, v, s));
    EXPECT_NE(vqe_energy(p, v, s), vqe_energy(p, v, ShotOptions{10'000, 6}));
}

TEST(Vqe, XBasisLayerReadsXX) {
    // after the layer, ZZ of the measured pair equals XX of the prepared state
    std::mt19937_64 rng(107);
    const VqeProblem p = make_vqe_problem(PauliHamiltonian{0, 0, 0, 0, 1.0});
    Eigen::Matrix4cd xx = Eigen::Matrix4cd::Zero();
    xx(0, 3) = xx(3, 0) = xx(1, 2) = xx(2, 1) = 1.0;
    for (int t = 0; t < 10; ++t) {
        const auto v = random_values(9, rng);
        const Eigen::Vector4cd psi = logical_state(evaluate_unitary(p.ansatz, v));
        EXPECT_NEAR(vqe_energy(p, v), (psi.adjoint() * xx * psi)(0).real(), 1e-12);
    }
}

TEST(Vqe, RandomPhasesAreSeeded) {
    const auto a = random_phases(9, 1, "init", 0);
    EXPECT_EQ(a, random_phases(9, 1, "init", 0));
    EXPECT_NE(a, random_phases(9, 1, "init", 1));
    EXPECT_NE(a, random_phases(9, 2, "init", 0));
    for (double x : a) {
        EXPECT_GE(x, 0.0);
        EXPECT_LT(x, 2 * kPi);
    }
}

// Haar average of |<psi_perp| A |psi>|^2 for the qubit block A of the gate:
// Tr(A^dagger A)/3 - |Tr A|^2/6 (second moments of Haar-random qubit states).
double unot_average_closed_form(std::span<const double> theta) {
    const ComplexMatrix a = evaluate_unitary(unot_block(), theta).topLeftCorner(2, 2);
    return (a.adjoint() * a).trace().real() / 3.0 - std::norm(a.trace()) / 6.0;
}

TEST(Unot, CostMatchesClosedForm) {
    std::mt19937_64 rng(109);
    const UnotProblem p = make_unot_problem();
    for (int t = 0; t < 20; ++t) {
        const auto v = random_values(5, rng);
        EXPECT_NEAR(unot_cost(p, v), -unot_average_closed_form(v), 1e-12);
    }
}

TEST(Unot, CostMatchesMonteCarloBlochIntegral) {
    std::mt19937_64 rng(113);
    const UnotProblem p = make_unot_problem();
    std::normal_distribution<double> n(0.0, 1.0);
    for (int t = 0; t < 3; ++t) {
        const auto v = random_values(5, rng);
        const ComplexMatrix a = evaluate_unitary(unot_block(), v).topLeftCorner(2, 2);
        constexpr int kSamples = 100'000;
        double sum = 0.0, sq = 0.0;
        for (int s = 0; s < kSamples; ++s) {
            Eigen::Vector2cd psi(Complex(n(rng), n(rng)), Complex(n(rng), n(rng)));
            psi.normalize();
            const Eigen::Vector2cd perp(-std::conj(psi(1)), std::conj(psi(0)));
            const double f = std::norm(perp.dot(a * psi));
            sum += f;
            sq += f * f;
        }
        const double mean = sum / kSamples;
        const double se = std::sqrt((sq / kSamples - mean * mean) / (kSamples - 1));
        EXPECT_LT(std::abs(unot_cost(p, v) + mean), 4 * se) << "vector " << t;
    }
    // an idle gate does not flip anything
    const std::vector<double> bar{kPi, 0.0, kPi, 0.0, kPi};
    EXPECT_NEAR(unot_cost(p, bar), -unot_average_closed_form(bar), 1e-12);
}

TEST(Unot, SixPointCostEqualsTensorRule) {
    std::mt19937_64 rng(127);
    const UnotProblem p = make_unot_problem();
    for (int t = 0; t < 20; ++t) {
        const auto v = random_values(5, rng);
        EXPECT_NEAR(unot_cost(p, v), unot_cost_tensor(p, v), 1e-10);
    }
}

TEST(Unot, QuantumBound) {
    std::mt19937_64 rng(131);
    const UnotProblem p = make_unot_problem();
    for (int t = 0; t < 500; ++t) EXPECT_GE(unot_cost(p, random_values(5, rng)), -2.0 / 3 - 1e-6);
}

TEST(Unot, GradientMatchesFiniteDifferences) {
    std::mt19937_64 rng(137);
    const UnotProblem p = make_unot_problem();
    for (int t = 0; t < 50; ++t) {
        const auto v = random_values(5, rng);
        const auto g = unot_gradient(p, v);
        const auto fd = central_difference([&](const std::vector<double>& x) { return unot_cost(p, x); }, v);
        for (std::size_t i = 0; i < 5; ++i) EXPECT_NEAR(g[i], fd[i], 1e-6);
    }
    const auto degrees = unot_degrees(p, random_values(5, rng));
    EXPECT_EQ(degrees, (std::vector<int>{1, 1, 1, 1, 1}));
}

TEST(Unot, DegreeZeroPhaseHasExactlyZeroGradient) {
    std::mt19937_64 rng(139);
    UnotProblem p = make_unot_problem();
    // a phase on the ancilla after everything else never meets a detected photon
    p.circuit.add_parameter("idle");
    p.circuit.add_phase(2, PhaseBinding::linear("idle"), 9);
    p.variational.push_back("idle");
    for (int t = 0; t < 5; ++t) {
        const auto v = random_values(6, rng);
        EXPECT_EQ(unot_degrees(p, v)[5], 0);
        EXPECT_EQ(unot_gradient(p, v)[5], 0.0);
    }
}

TEST(Unot, OptimumAndFidelityTest) {
    const UnotProblem p = make_unot_problem();
    MultiStartOptions opts;
    opts.starts = 5;
    const auto result = run_unot(p, 2026, opts);
    EXPECT_NEAR(result.cost, -2.0 / 3, 1e-3);
    const auto& x = result.starts[result.best].trace.final().params;
    EXPECT_LE(norm(unot_gradient(p, x)), 1e-4);

    const auto a = unot_fidelity_test(p, x, 200, 3);
    const auto b = unot_fidelity_test(p, x, 200, 3);
    EXPECT_EQ(a.histogram, b.histogram);
    EXPECT_EQ(a.fidelities, b.fidelities);
    EXPECT_EQ(a.bin_edges.size(), 21u);
    std::uint64_t total = 0;
    for (auto c : a.histogram) total += c;
    EXPECT_EQ(total, 200u);
    for (double f : a.fidelities) {
        EXPECT_GE(f, 0.0);
        EXPECT_LE(f, 1.0);
    }
    // closed form for an optimal gate: every state is flipped with fidelity 2/3
    EXPECT_NEAR(a.mean, 2.0 / 3, 0.05);
    const auto one = unot_fidelity_test(p, x, 1, 0);
    EXPECT_EQ(one.fidelities.size(), 1u);
    EXPECT_EQ(one.standard_error, 0.0);
    EXPECT_THROW(unot_fidelity_test(p, x, 0, 0), ContractError);
}

TEST(Unot, SuccessProbabilityBounds) {
    std::mt19937_64 rng(149);
    const UnotProblem p = make_unot_problem();
    for (int t = 0; t < 20; ++t) {
        const auto v = random_values(5, rng);
        const BlochAngles s{std::acos(1 - 2 * std::uniform_real_distribution<double>(0, 1)(rng)), 1.3};
        const double success = unot_success_probability(p, v, s);
        const double detect = unot_detection_probability(p, v, s);
        EXPECT_GE(success, -1e-12);
        EXPECT_LE(success, 1 + 1e-12);
        EXPECT_LE(detect, success + 1e-12);
    }
}

TEST(Optimizer, QuadraticBowl) {
    const CostFunction f = [](std::span<const double> x) {
        double s = 0;
        for (double v : x) s += (v - 1) * (v - 1);
        return s;
    };
    const GradientFunction g = [](std::span<const double> x) {
        std::vector<double> d;
        for (double v : x) d.push_back(2 * (v - 1));
        return d;
    };
    const auto trace = bfgs_minimize(f, g, std::vector<double>(5, 0.0));
    EXPECT_EQ(trace.status, OptimizerStatus::converged);
    EXPECT_LE(trace.iterates.size() - 1, 5u);
    for (double v : trace.final().params) EXPECT_NEAR(v, 1.0, 1e-8);
}

TEST(Optimizer, Rosenbrock) {
    const CostFunction f = [](std::span<const double> x) {
        return 100 * std::pow(x[1] - x[0] * x[0], 2) + std::pow(1 - x[0], 2);
    };
    const GradientFunction g = [](std::span<const double> x) {
        return std::vector<double>{-400 * x[0] * (x[1] - x[0] * x[0]) - 2 * (1 - x[0]), 200 * (x[1] - x[0] * x[0])};
    };
    OptimizerOptions o;
    o.grad_tol = 1e-10;
    const auto trace = bfgs_minimize(f, g, {-1.2, 1.0}, o);
    EXPECT_EQ(trace.status, OptimizerStatus::converged);
    EXPECT_NEAR(trace.final().params[0], 1.0, 1e-6);
    EXPECT_NEAR(trace.final().params[1], 1.0, 1e-6);
    // trace invariants: evaluations non-decreasing, noiseless cost non-increasing
    for (std::size_t i = 1; i < trace.iterates.size(); ++i) {
        EXPECT_GE(trace.iterates[i].evaluations, trace.iterates[i - 1].evaluations);
        EXPECT_LE(trace.iterates[i].cost, trace.iterates[i - 1].cost);
        EXPECT_EQ(trace.iterates[i].iteration, int(i));
    }
    EXPECT_EQ(trace.evaluations, trace.final().evaluations);
    EXPECT_EQ(trace.best_cost, trace.final().cost);
}

TEST(Optimizer, ZeroIterations) {
    const CostFunction f = [](std::span<const double> x) { return x[0] * x[0]; };
    const GradientFunction g = [](std::span<const double> x) { return std::vector<double>{2 * x[0]}; };
    OptimizerOptions o;
    o.max_iter = 0;
    const auto trace = bfgs_minimize(f, g, {3.0}, o);
    EXPECT_EQ(trace.status, OptimizerStatus::max_iter);
    ASSERT_EQ(trace.iterates.size(), 1u);
    EXPECT_EQ(trace.final().params, std::vector<double>{3.0});
    EXPECT_EQ(trace.final().cost, 9.0);
    EXPECT_EQ(to_string(trace.status), "max_iter");
}

TEST(Optimizer, WrongGradientReportsLineSearchFailure) {
    const CostFunction f = [](std::span<const double> x) { return x[0] * x[0]; };
    const GradientFunction g = [](std::span<const double> x) { return std::vector<double>{-2 * x[0]}; };
    const auto trace = bfgs_minimize(f, g, {3.0});
    EXPECT_EQ(trace.status, OptimizerStatus::line_search_failure);
    EXPECT_LE(trace.best_cost, 9.0);
    EXPECT_EQ(to_string(trace.status), "line_search_failure");
}

TEST(Optimizer, GradientDescentBaseline) {
    const CostFunction f = [](std::span<const double> x) { return (x[0] - 2) * (x[0] - 2) + 3 * x[1] * x[1]; };
    const GradientFunction g = [](std::span<const double> x) {
        return std::vector<double>{2 * (x[0] - 2), 6 * x[1]};
    };
    OptimizerOptions o;
    o.max_iter = 1000;
    o.learning_rate = 0.1;
    const auto trace = gradient_descent(f, g, {0.0, 1.0}, o);
    EXPECT_EQ(trace.status, OptimizerStatus::converged);
    EXPECT_NEAR(trace.final().params[0], 2.0, 1e-6);
    EXPECT_NEAR(trace.final().params[1], 0.0, 1e-6);
    const auto bfgs = bfgs_minimize(f, g, {0.0, 1.0});
    EXPECT_LT(bfgs.iterates.size(), trace.iterates.size());
}

TEST(Parallel, OrderedResultsAndExceptions) {
    for (int threads : {1, 2, 4, 8}) {
        const auto r = parallel_map(100, threads, [](std::size_t i) { return i * i; });
        for (std::size_t i = 0; i < 100; ++i) EXPECT_EQ(r[i], i * i);
    }
    EXPECT_THROW(parallel_map(50, 4,
                              [](std::size_t i) -> int {
                                  if (i == 17) throw std::runtime_error("boom");
                                  return 0;
                              }),
                 std::runtime_error);
    EXPECT_TRUE(parallel_map(0, 4, [](std::size_t) { return 1; }).empty());
}

TEST(Parallel, MultiStartIndependentOfThreadCount) {
    const UnotProblem p = make_unot_problem();
    MultiStartOptions one;
    one.starts = 4;
    one.shots = 2000;
    one.optimizer.max_iter = 5;
    MultiStartOptions four = one;
    four.threads = 4;
    const auto a = run_unot(p, 11, one);
    const auto b = run_unot(p, 11, four);
    EXPECT_EQ(a.best, b.best);
    EXPECT_EQ(a.cost, b.cost);
    for (std::size_t i = 0; i < a.starts.size(); ++i) {
        EXPECT_EQ(a.starts[i].trace.final().params, b.starts[i].trace.final().params);
    }
}

TEST(Random, DeriveSeed) {
    EXPECT_EQ(derive_seed(1, "a", 0), derive_seed(1, "a", 0));
    EXPECT_NE(derive_seed(1, "a", 0), derive_seed(1, "b", 0));
    EXPECT_NE(derive_seed(1, "a", 0), derive_seed(1, "a", 1));
    EXPECT_NE(derive_seed(1, "a", 0), derive_seed(2, "a", 0));
    auto r1 = make_rng(5, "s", 2);
    auto r2 = make_rng(5, "s", 2);
    EXPECT_EQ(r1(), r2());
    EXPECT_NE(mix64(1), mix64(2));
}

}  // namespace
}  // namespace photonshift
