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

#include <boost/math/quadrature/tanh_sinh.hpp>
#include <cmath>
#include <numbers>
#include <random>

#include "../support.hpp"
#include "photonshift/circuit.hpp"
#include "photonshift/degree.hpp"
#include "photonshift/error.hpp"
#include "photonshift/fourier.hpp"
#include "photonshift/integral_rule.hpp"
#include "photonshift/linear_optics.hpp"
#include "photonshift/shift_rule.hpp"
#include "photonshift/unot.hpp"

namespace photonshift {
namespace {

constexpr double kPi = std::numbers::pi;

FourierSeries random_series(int degree, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    FourierSeries f;
    f.degree = degree;
    f.a.resize(degree + 1);
    f.b.resize(degree + 1);
    for (int l = 0; l <= degree; ++l) {
        f.a[l] = u(rng);
        f.b[l] = l == 0 ? 0.0 : u(rng);
    }
    return f;
}

// Independent oracle: double-exponential quadrature, split at 0 where |sin| has its kink.
double oracle_integral(const ScalarFunction& h) {
    boost::math::quadrature::tanh_sinh<double> q;
    return q.integrate(h, -kPi, 0.0) + q.integrate(h, 0.0, kPi);
}

std::vector<double> random_values(std::size_t n, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(0.0, 2 * kPi);
    std::vector<double> v(n);
    for (auto& x : v) x = u(rng);
    return v;
}

TEST(PhaseDegree, Examples) {
    // nothing reaches mode 2 before the phase
    ComplexMatrix before = ComplexMatrix::Identity(3, 3);
    const ComplexMatrix after = ComplexMatrix::Constant(3, 3, Complex(0.5, 0.1));
    EXPECT_EQ(phase_degree(before, after, 1, {1, 0, 1}, {1, 1, 0}), 0);

    std::mt19937_64 rng(47);
    const ComplexMatrix u1 = testing::haar_unitary(3, rng);
    const ComplexMatrix u2 = testing::haar_unitary(3, rng);
    EXPECT_EQ(phase_degree(u1, u2, 1, {1, 0, 1}, {1, 1, 0}), 2);
    EXPECT_EQ(phase_degree(u1, u2, 0, {2, 0, 1}, {0, 3, 0}), 3);
    EXPECT_THROW(phase_degree(u1, u2, 0, {1, 0, 1}, {1, 0, 0}), ContractError);

    // first internal phase of a 3-mode mesh: only the mode-0 photon has been mixed in
    const auto mesh = build_clements_mesh(3);
    const auto v = random_values(mesh.parameter_count(), rng);
    const auto r = parameter_degree(mesh, "theta1", {1, 0, 1}, {1, 1, 0}, v);
    ASSERT_EQ(r.instances.size(), 1u);
    EXPECT_EQ(r.instances[0].degree, 1);
    EXPECT_EQ(r.degree, 1);
    EXPECT_EQ(r.photons, 2);
}

TEST(ParameterDegree, Examples) {
    std::mt19937_64 rng(53);
    ParametricCircuit c(2);
    c.add_parameter("x");
    c.add_parameter("unused");
    c.add_beam_splitter(0, 1);
    c.add_phase(0, PhaseBinding::linear("x"));
    c.add_beam_splitter(0, 1);
    const std::vector<double> v{0.4, 0.0};
    EXPECT_EQ(parameter_degree(c, "x", {1, 1}, {2, 0}, v).degree, 2);
    EXPECT_EQ(parameter_degree(c, "unused", {1, 1}, {2, 0}, v).degree, 0);
    EXPECT_THROW(parameter_degree(c, "nope", {1, 1}, {2, 0}, v), ContractError);
    EXPECT_EQ(photon_number_degree(c, "x", 2).degree, 2);

    const UnotProblem unot = make_unot_problem();
    auto w = random_values(unot.circuit.parameter_count(), rng);
    const auto report = parameter_degree(unot.circuit, "theta_p", unot.input, unot.detect, w);
    EXPECT_EQ(report.instances.size(), 2u);
    EXPECT_EQ(report.degree, 2);

    // multiplier 2 doubles the degree
    ParametricCircuit d(2);
    d.add_parameter("y");
    d.add_beam_splitter(0, 1);
    d.add_phase(0, PhaseBinding::linear("y", -2, 0.3));
    d.add_beam_splitter(0, 1);
    const std::vector<double> y{0.9};
    EXPECT_EQ(parameter_degree(d, "y", {1, 0}, {1, 0}, y).degree, 2);
}

// Largest |f - series| over off-node points.
double fit_residual(const ScalarFunction& f, int degree, std::mt19937_64& rng) {
    const FourierSeries s = reconstruct_fourier(f, degree);
    double worst = 0.0;
    for (double x : random_values(40, rng)) worst = std::max(worst, std::abs(s(x) - f(x)));
    return worst;
}

TEST(DegreeProperty, RandomMeshes) {
    std::mt19937_64 rng(59);
    int generic = 0;
    for (int trial = 0; trial < 30; ++trial) {
        const int m = 2 + trial % 5;
        const int n = 1 + trial % 3;
        const auto mesh = build_clements_mesh(m);
        auto v = random_values(mesh.parameter_count(), rng);
        const OccupationList r = testing::random_occupation(m, n, rng);
        const OccupationList s = testing::random_occupation(m, n, rng);
        const std::size_t k = std::uniform_int_distribution<std::size_t>(0, mesh.parameter_count() - 1)(rng);
        const std::string name = mesh.parameter_names()[k];
        const int degree = parameter_degree(mesh, name, r, s, v).degree;
        EXPECT_LE(degree, n);
        const GramMatrix g = testing::random_gram(n, 2, rng);
        for (bool partial : {false, true}) {
            const ScalarFunction f = [&](double x) {
                auto w = v;
                w[k] = x;
                const ComplexMatrix u = evaluate_unitary(mesh, w);
                return partial ? distinguishable_probability(u, r, s, g) : transition_probability(u, r, s);
            };
            EXPECT_LE(fit_residual(f, degree, rng), 1e-10) << "trial " << trial;
            if (degree >= 1) {
                const FourierSeries full = reconstruct_fourier(f, degree);
                const double top = std::hypot(full.a[degree], full.b[degree]);
                if (top >= 1e-3) {
                    ++generic;
                    EXPECT_GT(fit_residual(f, degree - 1, rng), 1e-3) << "trial " << trial;
                }
            }
        }
    }
    EXPECT_GT(generic, 10);
}

TEST(Fourier, Reconstruction) {
    const FourierSeries c = reconstruct_fourier([](double) { return 0.7; }, 1);
    EXPECT_NEAR(c.a[0], 0.7, 1e-15);
    EXPECT_NEAR(c.a[1], 0.0, 1e-15);
    EXPECT_NEAR(c.b[1], 0.0, 1e-15);
    const FourierSeries d = reconstruct_fourier([](double x) { return std::cos(2 * x); }, 2);
    EXPECT_NEAR(d.a[2], 1.0, 1e-14);
    for (double v : {d.a[0], d.a[1], d.b[1], d.b[2]}) EXPECT_NEAR(v, 0.0, 1e-14);

    std::mt19937_64 rng(61);
    for (int degree = 0; degree <= 5; ++degree) {
        const FourierSeries f = random_series(degree, rng);
        const FourierSeries g = reconstruct_fourier(f, degree);
        for (int l = 0; l <= degree; ++l) {
            EXPECT_NEAR(g.a[l], f.a[l], 1e-12);
            EXPECT_NEAR(g.b[l], f.b[l], 1e-12);
        }
        for (double x : random_values(50, rng)) EXPECT_NEAR(g(x), f(x), 1e-9);
    }
}

TEST(ShiftRule, Weights) {
    const auto r1 = derivative_rule(1);
    ASSERT_EQ(r1.shifts.size(), 2u);
    EXPECT_NEAR(r1.shifts[0], kPi / 2, 1e-15);
    EXPECT_NEAR(r1.weights[0], 0.5, 1e-15);
    EXPECT_NEAR(r1.weights[1], -0.5, 1e-15);
    EXPECT_NEAR(shift_derivative([](double x) { return std::sin(x); }, 0.0, 1), 1.0, 1e-15);

    const auto r2 = derivative_rule(2);
    ASSERT_EQ(r2.shifts.size(), 4u);
    const double big = (2 + std::sqrt(2.0)) / 4;
    const double small = (2 - std::sqrt(2.0)) / 4;
    // shifts pi/4, 3pi/4, 5pi/4 = -3pi/4, 7pi/4 = -pi/4
    EXPECT_NEAR(r2.shifts[0], kPi / 4, 1e-15);
    EXPECT_NEAR(r2.weights[0], big, 1e-15);
    EXPECT_NEAR(r2.shifts[1], 3 * kPi / 4, 1e-15);
    EXPECT_NEAR(r2.weights[1], -small, 1e-15);
    EXPECT_NEAR(std::remainder(r2.shifts[2], 2 * kPi), -3 * kPi / 4, 1e-15);
    EXPECT_NEAR(r2.weights[2], small, 1e-15);
    EXPECT_NEAR(std::remainder(r2.shifts[3], 2 * kPi), -kPi / 4, 1e-15);
    EXPECT_NEAR(r2.weights[3], -big, 1e-15);

    EXPECT_THROW(derivative_rule(0), ContractError);
    EXPECT_THROW(derivative_rule(-1), ContractError);
    const auto j = rule_to_json(r2);
    EXPECT_EQ(j.at("R"), 2);
    EXPECT_EQ(j.at("weights").size(), 4u);
}

TEST(ShiftRule, ExactOnTrigonometricPolynomials) {
    std::mt19937_64 rng(67);
    for (int degree = 1; degree <= 6; ++degree) {
        const FourierSeries f = random_series(degree, rng);
        for (double x0 : random_values(20, rng)) {
            EXPECT_NEAR(shift_derivative(f, x0, degree), f.derivative(x0), 1e-10) << "R=" << degree;
            // a rule of higher degree is still exact
            EXPECT_NEAR(shift_derivative(f, x0, degree + 1), f.derivative(x0), 1e-10);
            EXPECT_NEAR(shift_derivative(f, x0, degree), reconstruct_fourier(f, degree).derivative(x0), 1e-9);
        }
    }
    // too low a degree is wrong
    const FourierSeries f = reconstruct_fourier([](double x) { return std::cos(2 * x); }, 2);
    EXPECT_GT(std::abs(shift_derivative(f, 0.3, 1) - f.derivative(0.3)), 0.1);
}

TEST(ShiftRule, CircuitGradient) {
    ParametricCircuit c(2);
    c.add_parameter("theta");
    c.add_parameter("idle");
    c.add_beam_splitter(0, 1);
    c.add_phase(0, PhaseBinding::linear("theta"));
    c.add_phase(0, PhaseBinding::constant(kPi));
    c.add_beam_splitter(0, 1);
    const Observable p = [&](std::span<const double> v) {
        return transition_probability(evaluate_unitary(c, v), {1, 0}, {1, 0});
    };
    const std::vector<double> at{kPi / 2, 0.4};
    const std::vector<int> degrees{1, 0};
    const auto g = gradient(c, p, at, {"theta", "idle"}, degrees);
    EXPECT_NEAR(g[0], -0.5, 1e-14);  // d/dtheta cos^2(theta/2)
    EXPECT_EQ(g[1], 0.0);

    const Observable constant = [](std::span<const double>) { return 3.0; };
    const std::vector<int> ones{1, 1};
    for (double v : gradient(c, constant, at, {"theta", "idle"}, ones)) EXPECT_EQ(v, 0.0);
    const std::vector<int> one{1};
    EXPECT_THROW(gradient(c, p, at, {"theta", "idle"}, one), ContractError);
}

TEST(ShiftRule, MeshProbabilityAgainstFiniteDifference) {
    std::mt19937_64 rng(71);
    const auto mesh = build_clements_mesh(4);
    const OccupationList r{1, 0, 1, 0};
    const OccupationList s{0, 1, 1, 0};
    const Observable p = [&](std::span<const double> v) {
        return transition_probability(evaluate_unitary(mesh, v), r, s);
    };
    const auto names = mesh.parameter_names();
    for (int t = 0; t < 5; ++t) {
        const auto v = random_values(mesh.parameter_count(), rng);
        std::vector<DegreeReport> degrees;
        for (const auto& n : names) degrees.push_back(parameter_degree(mesh, n, r, s, v));
        const auto g = gradient(mesh, p, v, names, degrees);
        for (std::size_t i = 0; i < v.size(); ++i) {
            auto hi = v, lo = v;
            hi[i] += 1e-6;
            lo[i] -= 1e-6;
            EXPECT_NEAR(g[i], (p(hi) - p(lo)) / 2e-6, 1e-6);
        }
    }
}

void expect_exact_on_basis(const Weight& w, const IntegralRule& rule) {
    for (int l = 0; l <= rule.degree; ++l) {
        const ScalarFunction c = [l](double x) { return std::cos(l * x); };
        const ScalarFunction s = [l](double x) { return std::sin(l * x); };
        EXPECT_NEAR(integrate(c, rule), oracle_integral([&](double x) { return c(x) * w(x); }), 1e-9)
            << to_string(rule.kind) << " R=" << rule.degree << " cos " << l;
        EXPECT_NEAR(integrate(s, rule), oracle_integral([&](double x) { return s(x) * w(x); }), 1e-9)
            << to_string(rule.kind) << " R=" << rule.degree << " sin " << l;
    }
}

TEST(IntegralRule, BasisFunctionsAgainstQuadrature) {
    const std::vector<Weight> weights{
        Weight::uniform(),
        Weight::abs_sin_quarter(),
        Weight::even([](double x) { return std::exp(std::cos(x)) / 8.0; }),
        Weight::odd([](double x) { return std::sin(x) * std::exp(std::cos(2 * x)); }),
        Weight::general([](double x) { return (1.0 + 0.6 * std::sin(x) + 0.3 * std::cos(3 * x)) / (2 * kPi); }),
        Weight::general([](double x) { return std::exp(std::sin(x) - 0.5 * std::cos(x)); }),
    };
    for (const auto& w : weights) {
        for (int degree = 1; degree <= 4; ++degree) expect_exact_on_basis(w, integral_rule(w, degree));
    }
}

TEST(IntegralRule, NodeCounts) {
    const auto g = Weight::general([](double x) { return 1.0 + std::sin(x); });
    const auto o = Weight::odd([](double x) { return std::sin(x); });
    for (int degree = 1; degree <= 5; ++degree) {
        EXPECT_EQ(integral_rule(g, degree).abscissae.size(), std::size_t(2 * degree + 1));
        EXPECT_EQ(integral_rule(o, degree).abscissae.size(), std::size_t(2 * degree));
        EXPECT_EQ(integral_rule(Weight::abs_sin_quarter(), degree).abscissae.size(), std::size_t(2 * degree));
        EXPECT_EQ(integral_rule(Weight::uniform(), degree).abscissae.size(), std::size_t(2 * degree));
    }
    EXPECT_EQ(integral_rule(g, 2).kind, IntegralRule::Kind::general);
    EXPECT_EQ(integral_rule(o, 2).kind, IntegralRule::Kind::odd_weight);
    EXPECT_EQ(integral_rule(Weight::abs_sin_quarter(), 2).kind, IntegralRule::Kind::even_weight);
    EXPECT_EQ(integral_rule(Weight::uniform(), 2).kind, IntegralRule::Kind::uniform_mean);
}

TEST(IntegralRule, UniformMean) {
    const auto rule = integral_rule(Weight::uniform(), 2);
    ASSERT_EQ(rule.abscissae.size(), 4u);
    for (int k = 0; k < 4; ++k) {
        EXPECT_NEAR(rule.abscissae[k], k * kPi / 2, 1e-15);
        EXPECT_NEAR(rule.weights[k], 0.25, 1e-15);
    }
    for (int degree = 1; degree <= 4; ++degree) {
        const auto r = integral_rule(Weight::uniform(), degree);
        EXPECT_NEAR(integrate([](double) { return 1.0; }, r), 1.0, 1e-15);
        EXPECT_NEAR(integrate([](double x) { return std::cos(x); }, r), 0.0, 1e-15);
    }
}

TEST(IntegralRule, UnotCoefficients) {
    const auto c = integral_rule(Weight::abs_sin_quarter(), 2).coefficients;
    const std::vector<double> want_c{2.0 / 3, -4.0 / 3, 2.0 / 3, -4.0 / 3};
    ASSERT_EQ(c.size(), 4u);
    for (int k = 0; k < 4; ++k) EXPECT_NEAR(c[k], want_c[k], 1e-12);
    const auto d = integral_rule(Weight::even([](double) { return 1.0 / (2 * kPi); }), 2).coefficients;
    const std::vector<double> want_d{1, -1, 1, -1};
    ASSERT_EQ(d.size(), 4u);
    for (int k = 0; k < 4; ++k) EXPECT_NEAR(d[k], want_d[k], 1e-12);
}

TEST(IntegralRule, RandomSeriesAgainstQuadrature) {
    std::mt19937_64 rng(73);
    const Weight w = Weight::abs_sin_quarter();
    const auto rule = integral_rule(w, 2);
    for (int t = 0; t < 10; ++t) {
        const FourierSeries f = random_series(2, rng);
        EXPECT_NEAR(integrate(f, rule), oracle_integral([&](double x) { return f(x) * w(x); }), 1e-9);
    }
    // tensor rule on a product function
    const auto u = integral_rule(Weight::uniform(), 2);
    const FourierSeries a = random_series(2, rng);
    const FourierSeries b = random_series(2, rng);
    const double want = oracle_integral([&](double x) { return a(x) * w(x); }) *
                        oracle_integral([&](double y) { return b(y) / (2 * kPi); });
    EXPECT_NEAR(integrate([&](double x, double y) { return a(x) * b(y); }, rule, u), want, 1e-9);
}

TEST(IntegralRule, DeclaredParityIsChecked) {
    EXPECT_THROW(integral_rule(Weight::odd([](double x) { return std::cos(x); }), 2), ContractError);
    EXPECT_THROW(integral_rule(Weight::even([](double x) { return std::sin(x) + 1.0; }), 2), ContractError);
    EXPECT_NO_THROW(integral_rule(Weight::general([](double x) { return std::cos(x); }), 2));
    EXPECT_THROW(integral_rule(Weight::uniform(), 0), ContractError);
}

TEST(IntegralRule, JsonExport) {
    const auto j = rule_to_json(integral_rule(Weight::abs_sin_quarter(), 2));
    EXPECT_EQ(j.at("kind"), "even_weight");
    EXPECT_EQ(j.at("R"), 2);
    EXPECT_EQ(j.at("abscissae").size(), 4u);
    EXPECT_EQ(j.at("weights").size(), 4u);
}

}  // namespace
}  // namespace photonshift
