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
#include <algorithm>
#include <complex>
#include <numeric>
#include <random>
#include <vector>

#include "photonshift/fock.hpp"
#include "photonshift/linear_optics.hpp"

namespace photonshift::testing {

inline ComplexMatrix random_complex(int rows, int cols, std::mt19937_64& rng) {
    std::normal_distribution<double> n(0.0, 1.0);
    ComplexMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m(i, j) = Complex(n(rng), n(rng));
    return m;
}

// Haar measure: QR of a Ginibre matrix with the phases of diag(R) divided out.
inline ComplexMatrix haar_unitary(int n, std::mt19937_64& rng) {
    const ComplexMatrix z = random_complex(n, n, rng);
    Eigen::HouseholderQR<ComplexMatrix> qr(z);
    ComplexMatrix q = qr.householderQ();
    const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int j = 0; j < n; ++j) {
        const Complex d = r(j, j);
        q.col(j) *= d / std::abs(d);
    }
    return q;
}

// Sum over all n! permutations.
inline Complex brute_force_permanent(const ComplexMatrix& m) {
    const int n = static_cast<int>(m.rows());
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    Complex total = 0.0;
    do {
        Complex term = 1.0;
        for (int i = 0; i < n; ++i) term *= m(i, p[i]);
        total += term;
    } while (std::next_permutation(p.begin(), p.end()));
    return total;
}

inline double brute_force_permanent(const RealMatrix& m) {
    return brute_force_permanent(ComplexMatrix(m.cast<Complex>())).real();
}

// Overlaps of `photons` random internal states living in a `dim`-dimensional space.
inline GramMatrix random_gram(int photons, int dim, std::mt19937_64& rng) {
    return GramMatrix::from_internal_states(random_complex(dim, photons, rng));
}

inline OccupationList random_occupation(int modes, int photons, std::mt19937_64& rng) {
    std::vector<int> counts(modes, 0);
    std::uniform_int_distribution<int> pick(0, modes - 1);
    for (int k = 0; k < photons; ++k) ++counts[pick(rng)];
    return OccupationList(counts);
}

inline double max_abs(const ComplexMatrix& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace photonshift::testing
