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

#include "photonshift/permanent.hpp"

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "photonshift/error.hpp"

namespace photonshift {

namespace {

template <typename Matrix>
typename Matrix::Scalar glynn(const Matrix& m, int max_size) {
    using Scalar = typename Matrix::Scalar;
    if (m.rows() != m.cols()) {
        throw DimensionError(
            "permanent: matrix is " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
    }
    const auto n = static_cast<int>(m.rows());
    if (n > max_size) {
        throw CapExceeded("permanent: size " + std::to_string(n) + " above cap " +
                          std::to_string(max_size));
    }
    if (n == 0) return Scalar(1.0);
    if (n == 1) return m(0, 0);

    // Glynn: Per(A) = 2^{1-n} sum_{delta, delta_0 = +1} (prod_k delta_k) prod_j (sum_i delta_i a_ij).
    // Row 0 keeps delta = +1; the remaining n-1 signs run through a Gray code so that each
    // step updates the column sums with a single row.
    std::vector<Scalar> col_sums(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) col_sums[static_cast<std::size_t>(j)] = m.col(j).sum();
    std::vector<int> delta(static_cast<std::size_t>(n), 1);

    auto product = [&] {
        Scalar p(1.0);
        for (const Scalar& v : col_sums) p *= v;
        return p;
    };

    Scalar total = product();
    int sign = 1;
    const std::uint64_t steps = std::uint64_t{1} << (n - 1);
    for (std::uint64_t k = 1; k < steps; ++k) {
        // Row flipped at Gray step k: position of the lowest set bit, offset past row 0.
        const int row = std::countr_zero(k) + 1;
        const double factor = -2.0 * delta[static_cast<std::size_t>(row)];
        delta[static_cast<std::size_t>(row)] = -delta[static_cast<std::size_t>(row)];
        for (int j = 0; j < n; ++j) col_sums[static_cast<std::size_t>(j)] += factor * m(row, j);
        sign = -sign;
        total += static_cast<double>(sign) * product();
    }
    return total / static_cast<double>(steps);
}

}  // namespace

Complex permanent(const ComplexMatrix& m, int max_size) { return glynn(m, max_size); }

double permanent(const RealMatrix& m, int max_size) { return glynn(m, max_size); }

}  // namespace photonshift
