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
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

namespace photonshift {

/// Limits applied by every enumeration and permanent evaluation.
struct SimulationLimits {
    int max_photons = 12;
    int max_modes = 24;
    std::size_t max_outcomes = 2'000'000;
    /// Photon cap for the permutation-pair sum used by the partial distinguishability model.
    int max_distinguishable_photons = 8;
};

/// Photon count per optical mode (a Fock configuration). Modes are 0-based.
class OccupationList {
   public:
    OccupationList() = default;
    explicit OccupationList(std::vector<int> counts);
    OccupationList(std::initializer_list<int> counts);

    std::size_t mode_count() const { return counts_.size(); }
    int photon_count() const { return photons_; }
    int operator[](std::size_t mode) const { return counts_[mode]; }
    const std::vector<int>& counts() const { return counts_; }

    /// Compact label, e.g. "1,0,1".
    std::string str() const;

    friend bool operator==(const OccupationList&, const OccupationList&) = default;
    friend auto operator<=>(const OccupationList& a, const OccupationList& b) {
        return a.counts_ <=> b.counts_;
    }

   private:
    std::vector<int> counts_;
    int photons_ = 0;
};

std::ostream& operator<<(std::ostream& out, const OccupationList& r);

/// One mode index per photon, non-decreasing. Photon i of a configuration is the
/// photon at position i of this list.
using ModeAssignmentList = std::vector<int>;

ModeAssignmentList mode_assignment(const OccupationList& r);

/// Inverse of mode_assignment for a (not necessarily sorted) list of modes.
OccupationList occupation_from_modes(const std::vector<int>& modes, std::size_t mode_count);

/// Product of the factorials of the occupations. Rejects N > 20 (overflow of 64 bits).
std::uint64_t normalization_mu(const OccupationList& r);

/// Every occupation list of `photons` photons over `modes` modes, ordered by the
/// lexicographic order of their mode assignment lists ([2,0,0], [1,1,0], [1,0,1], ...).
std::vector<OccupationList> enumerate_occupations(
    std::size_t modes, int photons, const SimulationLimits& limits = {});

/// Number of occupation lists, C(modes + photons - 1, photons). Saturates at SIZE_MAX.
std::size_t occupation_count(std::size_t modes, int photons);

}  // namespace photonshift
