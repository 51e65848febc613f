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

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "photonshift/fock.hpp"
#include "photonshift/linear_optics.hpp"

namespace photonshift {

using OutcomePredicate = std::function<bool(const OccupationList&)>;

struct Outcome {
    OccupationList occupation;
    double probability = 0.0;
};

/// Output probabilities over a set of Fock outcomes.
struct OutcomeDistribution {
    std::vector<Outcome> outcomes;
    /// True when the outcome set was restricted by a predicate and renormalised.
    bool post_selected = false;
    /// Probability mass of the kept outcomes before renormalisation (1 when not post-selected).
    double kept_mass = 1.0;

    double total() const;
    /// Probability of `s`, 0 when `s` is not listed.
    double probability(const OccupationList& s) const;
};

struct DistributionOptions {
    OutcomePredicate post_selection;  // empty: keep every outcome
    std::optional<GramMatrix> gram;   // empty: indistinguishable photons
    SimulationLimits limits;
};

/// Transition probabilities from `r` to every output configuration (or the post-selected
/// subset, renormalised). Throws StarvationError when the kept subset has zero mass.
OutcomeDistribution output_distribution(const ComplexMatrix& u, const OccupationList& r,
                                        const DistributionOptions& options = {});

enum class ShotNoise { multinomial, poisson };

struct CountRecord {
    struct Entry {
        OccupationList occupation;
        std::uint64_t count = 0;
    };
    std::vector<Entry> outcomes;
    std::uint64_t total_shots = 0;
    std::uint64_t seed = 0;

    std::uint64_t count(const OccupationList& s) const;
};

/// Draws detection counts. Multinomial mode distributes exactly `shots` events; Poisson
/// mode draws each outcome independently with mean shots * p, so the total fluctuates.
CountRecord sample_counts(const OutcomeDistribution& dist, std::uint64_t shots,
                          std::uint64_t seed, ShotNoise mode = ShotNoise::multinomial);

}  // namespace photonshift
