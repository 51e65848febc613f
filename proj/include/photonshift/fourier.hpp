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
#include <vector>

namespace photonshift {

using ScalarFunction = std::function<double(double)>;

/// f(x) = a_0 + sum_{l=1..R} a_l cos(l x) + b_l sin(l x).
struct FourierSeries {
    int degree = 0;
    std::vector<double> a;  // a[0..R]
    std::vector<double> b;  // b[0..R], b[0] unused (0)

    double operator()(double x) const;
    double derivative(double x) const;
};

/// Trigonometric interpolation through the 2R+1 equispaced nodes 2 pi k / (2R+1).
/// Exact for functions of degree <= R.
FourierSeries reconstruct_fourier(const ScalarFunction& f, int degree);

}  // namespace photonshift
