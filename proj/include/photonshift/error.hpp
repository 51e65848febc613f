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

#include <stdexcept>
#include <string>

namespace photonshift {

/// Matrix shapes that do not fit together (non-square permanent, wrong Gram size, ...).
class DimensionError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// A documented precondition of an operation was violated by the caller.
class ContractError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Photon number, mode count or outcome count above the configured limit.
class CapExceeded : public std::length_error {
   public:
    using std::length_error::length_error;
};

/// Post-selection kept no events (zero probability mass or zero counts).
class StarvationError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

}  // namespace photonshift
