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

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "photonshift/circuit.hpp"
#include "photonshift/distribution.hpp"
#include "photonshift/fock.hpp"
#include "photonshift/optimizer.hpp"

namespace photonshift {

/// H = alpha II + beta ZI + gamma IZ + delta ZZ + mu XX, coefficients in Hartree.
struct PauliHamiltonian {
    double alpha = 0.0;
    double beta = 0.0;
    double gamma = 0.0;
    double delta = 0.0;
    double mu = 0.0;

    /// Two-qubit H2 Hamiltonian at the equilibrium bond length.
    static PauliHamiltonian hydrogen();
};

/// 4x4 matrix in the dual-rail outcome order 13, 14, 23, 24.
Eigen::Matrix4d hamiltonian_matrix(const PauliHamiltonian& h);
/// Lowest eigenvalue of hamiltonian_matrix(h).
double ground_energy(const PauliHamiltonian& h);

/// Two dual-rail qubits on a 4-mode block: qubit 1 on modes (0, 1), qubit 2 on (2, 3).
/// Outcome labels use the 1-based chip numbering, so "13" is one photon in mode 0 and
/// one in mode 2.
struct DualRailLayout {
    static constexpr int modes = 4;
    static const std::array<OccupationList, 4>& outcomes();   // 13, 14, 23, 24
    static const std::array<std::string, 4>& labels();
    /// Exactly one photon in each qubit pair.
    static bool keep(const OccupationList& s);
    static OccupationList logical_zero_zero() { return OccupationList{1, 0, 1, 0}; }
};

/// N13, N14, N23, N24: detection counts, or unnormalised probabilities in the noiseless case.
using DualRailCounts = std::array<double, 4>;

DualRailCounts dual_rail_counts(const CountRecord& counts);
/// Raw (not post-selected) probabilities of the four kept outcomes.
DualRailCounts dual_rail_counts(const ComplexMatrix& u, const OccupationList& input);

struct PauliExpectations {
    double ii = 1.0;
    double zi = 0.0;
    double iz = 0.0;
    double zz = 0.0;
    double xx = 0.0;
};

/// ZI, IZ, ZZ from computational-basis counts. Throws StarvationError when S = 0.
PauliExpectations pauli_expectations(const DualRailCounts& z_basis);
/// Adds XX, read as the ZZ combination of counts taken after the basis-change layer.
PauliExpectations pauli_expectations(const DualRailCounts& z_basis, const DualRailCounts& x_basis);
PauliExpectations pauli_expectations(const CountRecord& z_basis, const CountRecord& x_basis);

double energy(const PauliHamiltonian& h, const PauliExpectations& e);

/// Shot budget for one energy or gradient evaluation. Each basis setting and each shift
/// node gets `shots` events, drawn from sub-streams of `seed`.
struct ShotOptions {
    std::uint64_t shots = 0;
    std::uint64_t seed = 0;
    ShotNoise noise = ShotNoise::multinomial;
};

struct VqeProblem {
    /// 4-mode state preparation acting on |00>; its parameters are the variational ones.
    ParametricCircuit ansatz;
    /// Basis change to read XX (fixed, no parameters).
    ParametricCircuit x_basis_layer;
    OccupationList input = DualRailLayout::logical_zero_zero();
    PauliHamiltonian hamiltonian;
    /// Fourier degree used for the count derivatives (the photon number).
    int count_degree = 2;
};

/// Clements mesh on 4 modes whose first `variational` phases (construction order) are
/// free parameters theta0.. and whose remaining phases are fixed at 0.
ParametricCircuit vqe_ansatz(int variational = 9);
/// pi/2 phase on the first mode of each qubit pair followed by a balanced splitter per pair.
ParametricCircuit x_basis_layer();
VqeProblem make_vqe_problem(const PauliHamiltonian& h = PauliHamiltonian::hydrogen(),
                            int variational = 9);

/// Counts for both basis settings at `params`.
std::array<DualRailCounts, 2> vqe_counts(const VqeProblem& p, std::span<const double> params,
                                         const std::optional<ShotOptions>& shots,
                                         std::uint64_t stream = 0);

/// <psi|H|psi> from post-selected probabilities (exact) or sampled counts.
double vqe_energy(const VqeProblem& p, std::span<const double> params,
                  const std::optional<ShotOptions>& shots = std::nullopt);

/// Shift-rule gradient: count derivatives at shifts +-pi/4, +-3pi/4 combined through the
/// quotient rule d(N/S) = dN/S - N dS/S^2.
std::vector<double> vqe_gradient(const VqeProblem& p, std::span<const double> params,
                                 const std::optional<ShotOptions>& shots = std::nullopt);

/// Uniform random phases in [0, 2 pi) from the named sub-stream.
std::vector<double> random_phases(std::size_t count, std::uint64_t seed, std::string_view stream,
                                  std::uint64_t index);

struct MultiStartOptions {
    int starts = 20;
    /// Shots per basis setting and shift node; empty for exact probabilities.
    std::optional<std::uint64_t> shots;
    OptimizerOptions optimizer;
    int threads = 1;
};

struct StartResult {
    std::vector<double> initial;
    OptimizerTrace trace;
    double exact_cost = 0.0;  // noiseless cost at the final iterate
};

struct MultiStartResult {
    std::vector<StartResult> starts;
    std::size_t best = 0;
    /// Final cost of the best start. Under shot noise the best start is picked by its last
    /// measured cost and then measured again with fresh shots, so this value carries no
    /// selection bias.
    double cost = 0.0;
    double exact_cost = 0.0;
};

/// BFGS from `starts` random points; start i draws its initial point and every shot
/// sample from sub-streams of derive_seed(seed, "start", i).
MultiStartResult run_vqe(const VqeProblem& p, std::uint64_t seed, const MultiStartOptions& options);

}  // namespace photonshift
