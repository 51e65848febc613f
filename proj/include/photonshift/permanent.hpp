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

#include <Eigen/Dense>
#include <complex>

namespace photonshift {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using RealMatrix = Eigen::MatrixXd;

inline constexpr int kDefaultPermanentCap = 12;

/// Permanent of a square complex matrix by Glynn's formula with Gray-code ordering,
/// O(2^(n-1) n). The permanent of the 0x0 matrix is 1.
Complex permanent(const ComplexMatrix& m, int max_size = kDefaultPermanentCap);

/// Real-valued variant, used for the classical (fully distinguishable) limit.
double permanent(const RealMatrix& m, int max_size = kDefaultPermanentCap);

}  // namespace photonshift
