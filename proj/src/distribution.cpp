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

#include "photonshift/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "photonshift/error.hpp"
#include "photonshift/random.hpp"

namespace photonshift {

double OutcomeDistribution::total() const {
    double sum = 0.0;
    for (const auto& o : outcomes) sum += o.probability;
    return sum;
}

double OutcomeDistribution::probability(const OccupationList& s) const {
    for (const auto& o : outcomes) {
        if (o.occupation == s) return o.probability;
    }
    return 0.0;
}

OutcomeDistribution output_distribution(const ComplexMatrix& u, const OccupationList& r,
                                        const DistributionOptions& options) {
    if (u.rows() != u.cols()) throw DimensionError("interferometer matrix must be square");
    const auto m = static_cast<std::size_t>(u.rows());
    if (r.mode_count() != m) throw DimensionError("input occupation list has wrong mode count");
    if (options.gram && options.gram->photon_count() != r.photon_count()) {
        throw DimensionError("Gram matrix size must equal the photon number");
    }

    OutcomeDistribution dist;
    for (auto& s : enumerate_occupations(m, r.photon_count(), options.limits)) {
        if (options.post_selection && !options.post_selection(s)) continue;
        const double p = options.gram
                             ? distinguishable_probability(u, r, s, *options.gram, options.limits)
                             : transition_probability(u, r, s, options.limits);
        dist.outcomes.push_back({std::move(s), p});
    }

    const double mass = dist.total();
    if (mass > 1.0 + 1e-9) {
        throw ContractError("output probabilities sum above 1; is the matrix unitary?");
    }
    if (options.post_selection) {
        if (mass <= 0.0) throw StarvationError("post-selection keeps zero probability mass");
        for (auto& o : dist.outcomes) o.probability /= mass;
        dist.post_selected = true;
        dist.kept_mass = mass;
    }
    return dist;
}

std::uint64_t CountRecord::count(const OccupationList& s) const {
    for (const auto& e : outcomes) {
        if (e.occupation == s) return e.count;
    }
    return 0;
}

CountRecord sample_counts(const OutcomeDistribution& dist, std::uint64_t shots,
                          std::uint64_t seed, ShotNoise mode) {
    if (shots == 0) throw ContractError("sample_counts: zero shots");
    const double total = dist.total();
    if (std::abs(total - 1.0) > 1e-9) {
        throw ContractError("sample_counts: distribution is not normalised");
    }

    Rng rng(seed);
    CountRecord record;
    record.seed = seed;
    record.outcomes.reserve(dist.outcomes.size());

    if (mode == ShotNoise::poisson) {
        for (const auto& o : dist.outcomes) {
            std::uint64_t c = 0;
            const double mean = static_cast<double>(shots) * o.probability;
            if (mean > 0.0) {
                std::poisson_distribution<std::uint64_t> draw(mean);
                c = draw(rng);
            }
            record.outcomes.push_back({o.occupation, c});
            record.total_shots += c;
        }
        return record;
    }

    // Multinomial as a chain of conditional binomials over suffix masses.
    const std::size_t n = dist.outcomes.size();
    std::vector<double> suffix(n + 1, 0.0);
    for (std::size_t k = n; k-- > 0;) suffix[k] = suffix[k + 1] + dist.outcomes[k].probability;
    std::uint64_t remaining = shots;
    for (std::size_t k = 0; k < n; ++k) {
        const auto& o = dist.outcomes[k];
        std::uint64_t c = 0;
        if (remaining > 0 && o.probability > 0.0) {
            const double p =
                suffix[k + 1] <= 0.0 ? 1.0 : std::clamp(o.probability / suffix[k], 0.0, 1.0);
            std::binomial_distribution<std::uint64_t> draw(remaining, p);
            c = draw(rng);
        }
        record.outcomes.push_back({o.occupation, c});
        remaining -= c;
    }
    if (remaining > 0) {
        // Round-off left events unassigned: give them to the most likely outcome.
        const auto it = std::max_element(
            dist.outcomes.begin(), dist.outcomes.end(),
            [](const Outcome& a, const Outcome& b) { return a.probability < b.probability; });
        record.outcomes[static_cast<std::size_t>(it - dist.outcomes.begin())].count += remaining;
    }
    record.total_shots = shots;
    return record;
}

}  // namespace photonshift
