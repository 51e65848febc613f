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

#include "photonshift/linear_optics.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "photonshift/error.hpp"

namespace photonshift {

namespace {

constexpr double kNegativeProbabilityTol = 1e-12;

void check_pair(const ComplexMatrix& u, const OccupationList& r, const OccupationList& s) {
    if (u.rows() != u.cols()) throw DimensionError("interferometer matrix must be square");
    const auto m = static_cast<std::size_t>(u.rows());
    if (r.mode_count() != m || s.mode_count() != m) {
        throw DimensionError("occupation lists must have one entry per interferometer mode");
    }
    if (r.photon_count() != s.photon_count()) {
        throw ContractError("input and output photon numbers differ (" +
                            std::to_string(r.photon_count()) + " vs " +
                            std::to_string(s.photon_count()) + ")");
    }
}

}  // namespace

bool is_unitary(const ComplexMatrix& u, double tol) {
    if (u.rows() != u.cols()) return false;
    const ComplexMatrix diff = u * u.adjoint() - ComplexMatrix::Identity(u.rows(), u.cols());
    return diff.cwiseAbs().maxCoeff() <= tol || u.rows() == 0;
}

ComplexMatrix scattering_matrix(const ComplexMatrix& u, const OccupationList& r,
                                const OccupationList& s) {
    check_pair(u, r, s);
    const ModeAssignmentList in = mode_assignment(r);
    const ModeAssignmentList out = mode_assignment(s);
    const auto n = static_cast<Eigen::Index>(in.size());
    ComplexMatrix m(n, n);
    for (Eigen::Index h = 0; h < n; ++h) {
        for (Eigen::Index j = 0; j < n; ++j) {
            m(h, j) = u(out[static_cast<std::size_t>(h)], in[static_cast<std::size_t>(j)]);
        }
    }
    return m;
}

double clamp_probability(double p) {
    if (p >= 0.0) return p;
    if (p >= -kNegativeProbabilityTol) return 0.0;
    throw ContractError("probability " + std::to_string(p) + " is negative beyond round-off");
}

double transition_probability(const ComplexMatrix& u, const OccupationList& r,
                              const OccupationList& s, const SimulationLimits& limits) {
    if (r.photon_count() > limits.max_photons) throw CapExceeded("photon number above cap");
    const ComplexMatrix m = scattering_matrix(u, r, s);
    const double per = std::norm(permanent(m, limits.max_photons));
    return clamp_probability(per / static_cast<double>(normalization_mu(r) * normalization_mu(s)));
}

// ---------------------------------------------------------------------------------------
// Gram matrix

GramMatrix::GramMatrix(ComplexMatrix entries, double tol) : entries_(std::move(entries)) {
    if (entries_.rows() != entries_.cols()) throw DimensionError("Gram matrix must be square");
    const Eigen::Index n = entries_.rows();
    for (Eigen::Index i = 0; i < n; ++i) {
        if (std::abs(entries_(i, i) - Complex(1.0)) > tol) {
            throw ContractError("Gram matrix diagonal must be 1");
        }
        for (Eigen::Index j = 0; j < n; ++j) {
            if (std::abs(entries_(i, j) - std::conj(entries_(j, i))) > tol) {
                throw ContractError("Gram matrix is not Hermitian");
            }
        }
    }
    if (n > 0) {
        Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(entries_, Eigen::EigenvaluesOnly);
        if (eig.eigenvalues().minCoeff() < -tol) {
            throw ContractError("Gram matrix is not positive semi-definite");
        }
    }
}

GramMatrix GramMatrix::indistinguishable(int photons) {
    return GramMatrix(ComplexMatrix::Ones(photons, photons));
}

GramMatrix GramMatrix::distinguishable(int photons) {
    return GramMatrix(ComplexMatrix::Identity(photons, photons));
}

GramMatrix GramMatrix::uniform_overlap(int photons, double x) {
    ComplexMatrix g = ComplexMatrix::Constant(photons, photons, Complex(x));
    g.diagonal().setOnes();
    return GramMatrix(std::move(g));
}

GramMatrix GramMatrix::from_internal_states(const ComplexMatrix& states) {
    ComplexMatrix normalized = states;
    for (Eigen::Index j = 0; j < normalized.cols(); ++j) {
        const double norm = normalized.col(j).norm();
        if (norm == 0.0) throw ContractError("internal state vector is zero");
        normalized.col(j) /= norm;
    }
    ComplexMatrix g = normalized.adjoint() * normalized;
    g.diagonal().setOnes();
    return GramMatrix(std::move(g));
}

GramMatrix GramMatrix::relabeled(const std::vector<int>& perm) const {
    const Eigen::Index n = entries_.rows();
    if (static_cast<Eigen::Index>(perm.size()) != n) throw DimensionError("relabel size mismatch");
    ComplexMatrix g(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            g(i, j) = entries_(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]);
        }
    }
    return GramMatrix(std::move(g));
}

// ---------------------------------------------------------------------------------------
// J matrix

std::vector<std::vector<int>> all_permutations(int n) {
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::vector<int>> result;
    do {
        result.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return result;
}

JMatrix::JMatrix(int photons, ComplexMatrix entries, double tol)
    : photons_(photons), entries_(std::move(entries)) {
    if (photons < 0 || photons > kMaxJMatrixPhotons) {
        throw CapExceeded("J matrix supports at most " + std::to_string(kMaxJMatrixPhotons) +
                          " photons");
    }
    perms_ = all_permutations(photons);
    const auto size = static_cast<Eigen::Index>(perms_.size());
    if (entries_.rows() != size || entries_.cols() != size) {
        throw DimensionError("J matrix must be N! x N!");
    }
    const double scale = std::max(1.0, entries_.cwiseAbs().maxCoeff());
    if ((entries_ - entries_.adjoint()).cwiseAbs().maxCoeff() > tol * scale) {
        throw ContractError("J matrix is not Hermitian");
    }
}

double input_state_norm(const OccupationList& r, const GramMatrix& g) {
    if (g.photon_count() != r.photon_count()) {
        throw DimensionError("Gram matrix size must equal the photon number");
    }
    // Product over input modes of the permanent of G restricted to the photons of that mode.
    double norm = 1.0;
    int offset = 0;
    for (int count : r.counts()) {
        if (count > 1) {
            const ComplexMatrix block = g.entries().block(offset, offset, count, count);
            norm *= permanent(block).real();
        }
        offset += count;
    }
    return norm;
}

JMatrix j_matrix_from_gram(const GramMatrix& g, const OccupationList& r) {
    const int n = g.photon_count();
    if (n > kMaxJMatrixPhotons) throw CapExceeded("J matrix photon cap exceeded");
    const auto perms = all_permutations(n);
    const double scale =
        static_cast<double>(normalization_mu(r)) / input_state_norm(r, g);

    // Inverse permutations: slot k -> photon.
    std::vector<std::vector<int>> inverse(perms.size(), std::vector<int>(static_cast<std::size_t>(n)));
    for (std::size_t p = 0; p < perms.size(); ++p) {
        for (int j = 0; j < n; ++j) inverse[p][static_cast<std::size_t>(perms[p][static_cast<std::size_t>(j)])] = j;
    }
    const auto size = static_cast<Eigen::Index>(perms.size());
    ComplexMatrix j(size, size);
    for (Eigen::Index a = 0; a < size; ++a) {
        for (Eigen::Index b = 0; b < size; ++b) {
            Complex prod(scale);
            for (int k = 0; k < n; ++k) {
                prod *= g(inverse[static_cast<std::size_t>(a)][static_cast<std::size_t>(k)],
                          inverse[static_cast<std::size_t>(b)][static_cast<std::size_t>(k)]);
            }
            j(a, b) = prod;
        }
    }
    return JMatrix(n, std::move(j));
}

double distinguishable_permutation_sum(const ComplexMatrix& m, const GramMatrix& g,
                                       const SimulationLimits& limits) {
    if (m.rows() != m.cols()) throw DimensionError("scattering matrix must be square");
    const int n = static_cast<int>(m.rows());
    if (g.photon_count() != n) throw DimensionError("Gram matrix size must equal the photon number");
    if (n > limits.max_distinguishable_photons) {
        throw CapExceeded("partial distinguishability photon cap exceeded");
    }
    // For a fixed slot->photon map a, the sum over b is Per(B) with
    // B[h][j] = conj(M[h][a(h)]) M[h][j] G[a(h)][j].
    std::vector<int> a(static_cast<std::size_t>(n));
    std::iota(a.begin(), a.end(), 0);
    ComplexMatrix b(n, n);
    Complex total(0.0);
    do {
        for (int h = 0; h < n; ++h) {
            const int photon = a[static_cast<std::size_t>(h)];
            const Complex left = std::conj(m(h, photon));
            for (int j = 0; j < n; ++j) b(h, j) = left * m(h, j) * g(photon, j);
        }
        total += permanent(b, n);
    } while (std::next_permutation(a.begin(), a.end()));
    // J is Hermitian, so the sum is real up to round-off.
    return total.real();
}

double distinguishable_probability(const ComplexMatrix& u, const OccupationList& r,
                                   const OccupationList& s, const GramMatrix& g,
                                   const SimulationLimits& limits) {
    if (g.photon_count() != r.photon_count()) {
        throw DimensionError("Gram matrix size must equal the photon number");
    }
    const ComplexMatrix m = scattering_matrix(u, r, s);
    const double sum = distinguishable_permutation_sum(m, g, limits);
    return clamp_probability(sum /
                             (static_cast<double>(normalization_mu(s)) * input_state_norm(r, g)));
}

double distinguishable_probability(const ComplexMatrix& u, const OccupationList& r,
                                   const OccupationList& s, const JMatrix& j) {
    if (j.photon_count() != r.photon_count()) {
        throw DimensionError("J matrix photon number mismatch");
    }
    const ComplexMatrix m = scattering_matrix(u, r, s);
    const int n = j.photon_count();
    const auto& perms = j.permutations();
    // amp[p] = prod_k M[sigma_p(k)][k]
    std::vector<Complex> amp(perms.size());
    for (std::size_t p = 0; p < perms.size(); ++p) {
        Complex prod(1.0);
        for (int k = 0; k < n; ++k) prod *= m(perms[p][static_cast<std::size_t>(k)], k);
        amp[p] = prod;
    }
    Complex total(0.0);
    for (std::size_t a = 0; a < perms.size(); ++a) {
        for (std::size_t b = 0; b < perms.size(); ++b) {
            total += j.entries()(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) *
                     std::conj(amp[a]) * amp[b];
        }
    }
    return clamp_probability(total.real() / static_cast<double>(normalization_mu(r) *
                                                                normalization_mu(s)));
}

}  // namespace photonshift
