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

#include "photonshift/integral_rule.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <numbers>

#include "photonshift/error.hpp"

namespace photonshift {

namespace {

constexpr double kPi = std::numbers::pi;

double sign_of(int k) { return (k % 2 == 0) ? 1.0 : -1.0; }

}  // namespace

Weight Weight::uniform() {
    return Weight(Kind::uniform, [](double) { return 1.0 / (2.0 * kPi); });
}

Weight Weight::abs_sin_quarter() {
    return Weight(Kind::abs_sin_quarter, [](double x) { return std::abs(std::sin(x)) / 4.0; });
}

Weight Weight::odd(ScalarFunction g) { return Weight(Kind::odd, std::move(g)); }
Weight Weight::even(ScalarFunction g) { return Weight(Kind::even, std::move(g)); }
Weight Weight::general(ScalarFunction g) { return Weight(Kind::general, std::move(g)); }

double Weight::operator()(double x) const { return g_(x); }

std::string to_string(IntegralRule::Kind kind) {
    switch (kind) {
        case IntegralRule::Kind::general: return "general";
        case IntegralRule::Kind::odd_weight: return "odd_weight";
        case IntegralRule::Kind::even_weight: return "even_weight";
        case IntegralRule::Kind::uniform_mean: return "uniform_mean";
    }
    return "unknown";
}

namespace {

struct Moments {
    std::vector<double> cos;  // integral g(x) cos(l x), l = 0..R
    std::vector<double> sin;  // integral g(x) sin(l x), l = 0..R
};

double quadrature(const ScalarFunction& h) {
    using boost::math::quadrature::gauss_kronrod;
    constexpr unsigned kDepth = 20;
    constexpr double kTol = 1e-14;
    return gauss_kronrod<double, 31>::integrate(h, -kPi, 0.0, kDepth, kTol) +
           gauss_kronrod<double, 31>::integrate(h, 0.0, kPi, kDepth, kTol);
}

Moments moments(const Weight& w, int degree) {
    Moments m;
    m.cos.assign(static_cast<std::size_t>(degree) + 1, 0.0);
    m.sin.assign(static_cast<std::size_t>(degree) + 1, 0.0);
    switch (w.kind()) {
        case Weight::Kind::uniform:
            m.cos[0] = 1.0;
            return m;
        case Weight::Kind::abs_sin_quarter:
            // (1/2) int_0^pi sin x cos(l x) dx = 1 / (1 - l^2) for even l, 0 for odd l.
            for (int l = 0; l <= degree; l += 2) {
                m.cos[static_cast<std::size_t>(l)] = 1.0 / (1.0 - static_cast<double>(l) * l);
            }
            return m;
        default:
            break;
    }
    for (int l = 0; l <= degree; ++l) {
        if (w.kind() != Weight::Kind::odd) {
            m.cos[static_cast<std::size_t>(l)] =
                quadrature([&](double x) { return w(x) * std::cos(l * x); });
        }
        if (w.kind() != Weight::Kind::even && l > 0) {
            m.sin[static_cast<std::size_t>(l)] =
                quadrature([&](double x) { return w(x) * std::sin(l * x); });
        }
    }
    return m;
}

void check_parity(const Weight& w) {
    const bool even = w.kind() == Weight::Kind::even;
    if (!even && w.kind() != Weight::Kind::odd) return;
    for (int i = 1; i <= 64; ++i) {
        const double x = kPi * (i - 0.5) / 64.0;
        const double gp = w(x);
        const double gm = w(-x);
        const double mismatch = even ? gp - gm : gp + gm;
        if (std::abs(mismatch) > 1e-10 * (1.0 + std::abs(gp))) {
            throw ContractError(std::string("weight declared ") + (even ? "even" : "odd") +
                                " but g(x) and g(-x) disagree at x = " + std::to_string(x));
        }
    }
}

}  // namespace

// The kernels are evaluated through their finite cosine/sine expansions, which have no
// removable singularities:
//   sin((2R+1)x/2) / sin(x/2 - k pi/(2R+1)) = (-1)^k D(x - x_k),  D(t) = 1 + 2 sum_{l<=R} cos(l t)
//   sin(Rx) sin x / (cos a - cos x)        = (-1)^k [1 + 2 sum_{l<R} cos(la) cos(lx) + cos(Ra) cos(Rx)]
//   cos(Rx) sin x / (cos y - cos x)        = (-1)^k [2 sum_{l<R} sin(ly) sin(lx) + sin(Ry) sin(Rx)]
// so each c_k is a finite combination of the Fourier moments of g.
IntegralRule integral_rule(const Weight& weight, int degree) {
    if (degree < 1) throw ContractError("integral rule degree must be at least 1");
    check_parity(weight);
    const Moments m = moments(weight, degree);
    const int r = degree;

    IntegralRule rule;
    rule.degree = r;
    switch (weight.kind()) {
        case Weight::Kind::general: {
            rule.kind = IntegralRule::Kind::general;
            for (int k = 0; k <= 2 * r; ++k) {
                const double xk = 2.0 * kPi * k / (2 * r + 1);
                double c = m.cos[0];
                for (int l = 1; l <= r; ++l) {
                    c += 2.0 * (std::cos(l * xk) * m.cos[static_cast<std::size_t>(l)] +
                                std::sin(l * xk) * m.sin[static_cast<std::size_t>(l)]);
                }
                c *= sign_of(k);
                rule.coefficients.push_back(c);
                rule.abscissae.push_back(xk);
                rule.weights.push_back(sign_of(k) * c / (2 * r + 1));
            }
            break;
        }
        case Weight::Kind::odd: {
            rule.kind = IntegralRule::Kind::odd_weight;
            for (int k = 1; k <= r; ++k) {
                const double yk = (2 * k - 1) * kPi / (2 * r);
                double c = std::sin(r * yk) * m.sin[static_cast<std::size_t>(r)];
                for (int l = 1; l < r; ++l) c += 2.0 * std::sin(l * yk) * m.sin[static_cast<std::size_t>(l)];
                c *= sign_of(k);
                rule.coefficients.push_back(c);
                const double w = sign_of(k) * c / (2 * r);
                rule.abscissae.push_back(yk);
                rule.weights.push_back(w);
                rule.abscissae.push_back(-yk);
                rule.weights.push_back(-w);
            }
            break;
        }
        case Weight::Kind::uniform:
        case Weight::Kind::abs_sin_quarter:
        case Weight::Kind::even: {
            rule.kind = weight.kind() == Weight::Kind::uniform ? IntegralRule::Kind::uniform_mean
                                                               : IntegralRule::Kind::even_weight;
            for (int k = 0; k < 2 * r; ++k) {
                const double ak = k * kPi / r;
                double c = m.cos[0] + std::cos(r * ak) * m.cos[static_cast<std::size_t>(r)];
                for (int l = 1; l < r; ++l) c += 2.0 * std::cos(l * ak) * m.cos[static_cast<std::size_t>(l)];
                c *= sign_of(k);
                rule.coefficients.push_back(c);
                rule.abscissae.push_back(ak);
                rule.weights.push_back(sign_of(k) * c / (2 * r));
            }
            break;
        }
    }
    return rule;
}

double integrate(const ScalarFunction& f, const IntegralRule& rule) {
    double sum = 0.0;
    for (std::size_t k = 0; k < rule.abscissae.size(); ++k) sum += rule.weights[k] * f(rule.abscissae[k]);
    return sum;
}

double integrate(const std::function<double(double, double)>& f, const IntegralRule& first,
                 const IntegralRule& second) {
    double sum = 0.0;
    for (std::size_t i = 0; i < first.abscissae.size(); ++i) {
        for (std::size_t j = 0; j < second.abscissae.size(); ++j) {
            sum += first.weights[i] * second.weights[j] * f(first.abscissae[i], second.abscissae[j]);
        }
    }
    return sum;
}

nlohmann::json rule_to_json(const IntegralRule& rule) {
    return {{"kind", to_string(rule.kind)},
            {"R", rule.degree},
            {"abscissae", rule.abscissae},
            {"weights", rule.weights},
            {"coefficients", rule.coefficients}};
}

}  // namespace photonshift
