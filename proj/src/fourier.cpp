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

#include "photonshift/fourier.hpp"

#include <cmath>
#include <numbers>

#include "photonshift/error.hpp"

namespace photonshift {

double FourierSeries::operator()(double x) const {
    double v = a[0];
    for (int l = 1; l <= degree; ++l) {
        v += a[static_cast<std::size_t>(l)] * std::cos(l * x) +
             b[static_cast<std::size_t>(l)] * std::sin(l * x);
    }
    return v;
}

double FourierSeries::derivative(double x) const {
    double v = 0.0;
    for (int l = 1; l <= degree; ++l) {
        v += l * (b[static_cast<std::size_t>(l)] * std::cos(l * x) -
                  a[static_cast<std::size_t>(l)] * std::sin(l * x));
    }
    return v;
}

FourierSeries reconstruct_fourier(const ScalarFunction& f, int degree) {
    if (degree < 0) throw ContractError("Fourier degree must be non-negative");
    const int nodes = 2 * degree + 1;
    std::vector<double> samples(static_cast<std::size_t>(nodes));
    for (int k = 0; k < nodes; ++k) {
        samples[static_cast<std::size_t>(k)] = f(2.0 * std::numbers::pi * k / nodes);
    }

    FourierSeries s;
    s.degree = degree;
    s.a.assign(static_cast<std::size_t>(degree) + 1, 0.0);
    s.b.assign(static_cast<std::size_t>(degree) + 1, 0.0);
    for (int l = 0; l <= degree; ++l) {
        double ca = 0.0;
        double cb = 0.0;
        for (int k = 0; k < nodes; ++k) {
            const double x = 2.0 * std::numbers::pi * k / nodes;
            ca += samples[static_cast<std::size_t>(k)] * std::cos(l * x);
            cb += samples[static_cast<std::size_t>(k)] * std::sin(l * x);
        }
        const double scale = (l == 0 ? 1.0 : 2.0) / nodes;
        s.a[static_cast<std::size_t>(l)] = scale * ca;
        s.b[static_cast<std::size_t>(l)] = l == 0 ? 0.0 : scale * cb;
    }
    return s;
}

}  // namespace photonshift
