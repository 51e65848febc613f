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

#include "photonshift/fock.hpp"

#include <limits>
#include <numeric>
#include <sstream>

#include "photonshift/error.hpp"

namespace photonshift {

OccupationList::OccupationList(std::vector<int> counts) : counts_(std::move(counts)) {
    for (int c : counts_) {
        if (c < 0) {
            throw ContractError("occupation counts must be non-negative");
        }
        photons_ += c;
    }
}

OccupationList::OccupationList(std::initializer_list<int> counts)
    : OccupationList(std::vector<int>(counts)) {}

std::string OccupationList::str() const {
    std::ostringstream out;
    for (std::size_t j = 0; j < counts_.size(); ++j) {
        if (j) out << ',';
        out << counts_[j];
    }
    return out.str();
}

std::ostream& operator<<(std::ostream& out, const OccupationList& r) {
    return out << '[' << r.str() << ']';
}

ModeAssignmentList mode_assignment(const OccupationList& r) {
    ModeAssignmentList modes;
    modes.reserve(static_cast<std::size_t>(r.photon_count()));
    for (std::size_t j = 0; j < r.mode_count(); ++j) {
        modes.insert(modes.end(), static_cast<std::size_t>(r[j]), static_cast<int>(j));
    }
    return modes;
}

OccupationList occupation_from_modes(const std::vector<int>& modes, std::size_t mode_count) {
    std::vector<int> counts(mode_count, 0);
    for (int m : modes) {
        if (m < 0 || static_cast<std::size_t>(m) >= mode_count) {
            throw ContractError("mode index out of range");
        }
        ++counts[static_cast<std::size_t>(m)];
    }
    return OccupationList(std::move(counts));
}

std::uint64_t normalization_mu(const OccupationList& r) {
    if (r.photon_count() > 20) {
        throw CapExceeded("normalization_mu: more than 20 photons overflows 64-bit factorials");
    }
    std::uint64_t mu = 1;
    for (int c : r.counts()) {
        for (int k = 2; k <= c; ++k) mu *= static_cast<std::uint64_t>(k);
    }
    return mu;
}

std::size_t occupation_count(std::size_t modes, int photons) {
    if (modes == 0) return photons == 0 ? 1 : 0;
    // C(modes + photons - 1, photons), built incrementally so every step is exact.
    unsigned long long result = 1;
    const auto n = static_cast<unsigned long long>(modes) - 1;
    for (unsigned long long k = 1; k <= static_cast<unsigned long long>(photons); ++k) {
        const unsigned long long num = n + k;
        if (result > std::numeric_limits<unsigned long long>::max() / num) {
            return std::numeric_limits<std::size_t>::max();
        }
        result = result * num / k;
    }
    return static_cast<std::size_t>(result);
}

std::vector<OccupationList> enumerate_occupations(
    std::size_t modes, int photons, const SimulationLimits& limits) {
    if (photons < 0) throw ContractError("photon number must be non-negative");
    if (photons > limits.max_photons) throw CapExceeded("photon number above cap");
    if (static_cast<int>(modes) > limits.max_modes) throw CapExceeded("mode count above cap");
    if (modes == 0) {
        if (photons != 0) throw ContractError("photons require at least one mode");
        return {OccupationList{}};
    }
    if (occupation_count(modes, photons) > limits.max_outcomes) {
        throw CapExceeded("outcome count above cap");
    }

    std::vector<OccupationList> result;
    result.reserve(occupation_count(modes, photons));
    // Walk non-decreasing mode assignment lists in lexicographic order.
    std::vector<int> assignment(static_cast<std::size_t>(photons), 0);
    const int last = static_cast<int>(modes) - 1;
    while (true) {
        result.push_back(occupation_from_modes(assignment, modes));
        int pos = photons - 1;
        while (pos >= 0 && assignment[static_cast<std::size_t>(pos)] == last) --pos;
        if (pos < 0) break;
        const int next = assignment[static_cast<std::size_t>(pos)] + 1;
        for (int k = pos; k < photons; ++k) assignment[static_cast<std::size_t>(k)] = next;
    }
    return result;
}

}  // namespace photonshift
