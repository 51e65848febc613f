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

#include <cstddef>
#include <vector>

#include "photonshift/fock.hpp"
#include "photonshift/permanent.hpp"

namespace photonshift {

/// True when U U^dagger = I within `tol` per entry.
bool is_unitary(const ComplexMatrix& u, double tol = 1e-10);

/// N x N matrix M_hj = U[d(s)_h][d(r)_j]: rows follow the output photons, columns the
/// input photons.
ComplexMatrix scattering_matrix(const ComplexMatrix& u, const OccupationList& r,
                                const OccupationList& s);

/// Probability of observing `s` for indistinguishable photons entering as `r`:
/// |Per(M)|^2 / (mu(r) mu(s)).
double transition_probability(const ComplexMatrix& u, const OccupationList& r,
                              const OccupationList& s, const SimulationLimits& limits = {});

/// Maps values in [-1e-12, 0) to 0 and rejects anything more negative.
double clamp_probability(double p);

/// Overlaps of the photons' internal states, G[i][j] = <psi_i|psi_j>, with photon i the
/// i-th entry of the input mode assignment list.
class GramMatrix {
   public:
    /// Validates hermiticity, unit diagonal and positive semi-definiteness.
    explicit GramMatrix(ComplexMatrix entries, double tol = 1e-10);

    static GramMatrix indistinguishable(int photons);
    static GramMatrix distinguishable(int photons);
    /// Every pair of photons shares the same real overlap x.
    static GramMatrix uniform_overlap(int photons, double x);
    /// Columns are internal-state vectors; each is normalised before taking overlaps.
    static GramMatrix from_internal_states(const ComplexMatrix& states);

    int photon_count() const { return static_cast<int>(entries_.rows()); }
    const ComplexMatrix& entries() const { return entries_; }
    Complex operator()(int i, int j) const { return entries_(i, j); }

    /// The same photons listed in a different order: result(i, j) = G(perm[i], perm[j]).
    GramMatrix relabeled(const std::vector<int>& perm) const;

   private:
    ComplexMatrix entries_;
};

/// Distinguishability matrix J(sigma1, sigma2) over pairs of permutations of N photons.
/// Index k refers to permutations()[k], which are listed in lexicographic order; a
/// permutation maps input photon j to output slot sigma[j].
class JMatrix {
   public:
    JMatrix(int photons, ComplexMatrix entries, double tol = 1e-10);

    int photon_count() const { return photons_; }
    const ComplexMatrix& entries() const { return entries_; }
    const std::vector<std::vector<int>>& permutations() const { return perms_; }

   private:
    int photons_;
    ComplexMatrix entries_;
    std::vector<std::vector<int>> perms_;
};

/// Photon cap for the explicit N! x N! J matrix.
inline constexpr int kMaxJMatrixPhotons = 6;

/// All permutations of 0..n-1 in lexicographic order.
std::vector<std::vector<int>> all_permutations(int n);

/// Normalisation of the input state prod_j a^dagger_{d(r)_j, psi_j}|0>: the sum over
/// permutations that keep every photon in its own input mode of prod_j G[j][pi(j)].
/// Equals mu(r) when photons sharing a mode are identical.
double input_state_norm(const OccupationList& r, const GramMatrix& g);

/// J(sigma1, sigma2) = prod_k G[sigma1^-1(k)][sigma2^-1(k)], rescaled by
/// mu(r) / input_state_norm(r, G) so that the raw-J formula (which divides by mu(r)
/// mu(s)) matches distinguishable_probability with the Gram matrix.
JMatrix j_matrix_from_gram(const GramMatrix& g, const OccupationList& r);

/// Sum over permutation pairs sum_{a,b} prod_h conj(M[h][a(h)]) M[h][b(h)] G[a(h)][b(h)],
/// evaluated as sum over a of a permanent, O(N! 2^N N). a and b map output slots to photons.
double distinguishable_permutation_sum(const ComplexMatrix& m, const GramMatrix& g,
                                       const SimulationLimits& limits = {});

/// Transition probability for photons with internal states described by G.
/// Reduces to transition_probability when G is all ones and to the classical
/// Per(|M|^2) / (mu(r) mu(s)) when G is the identity and input modes are singly occupied.
double distinguishable_probability(const ComplexMatrix& u, const OccupationList& r,
                                   const OccupationList& s, const GramMatrix& g,
                                   const SimulationLimits& limits = {});

/// Raw double permutation sum with an injected J matrix, normalised by mu(r) mu(s).
double distinguishable_probability(const ComplexMatrix& u, const OccupationList& r,
                                   const OccupationList& s, const JMatrix& j);

}  // namespace photonshift
