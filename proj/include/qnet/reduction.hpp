// Copyright 2026 The qnet Authors
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
#include <string>
#include <vector>

#include "qnet/distribution.hpp"
#include "qnet/network.hpp"
#include "qnet/rational.hpp"

namespace qnet::reduction {

struct Reduced {
    NetworkSpec spec;
    /// Key positions in the reduced spec's outcome that reproduce the
    /// original key, in order.
    std::vector<std::size_t> original_positions;
    /// Key positions of the added parties' Bell-measurement bits.
    std::vector<std::size_t> teleport_positions;
    std::size_t teleported_qubits = 0;
};

/// Replaces every source by a fresh copy held by a new party C_<edge>, which
/// teleports each qubit to its original vertex through a new Bell edge.
Reduced teleport_reduce(const NetworkSpec &spec);

struct ReductionReport {
    bool equal = false;
    Rational postselect_prob;
    Rational expected_prob;
    std::size_t k_before = 0;
    std::size_t k_after = 0;
    bool extension = false;  // the input had mixed sources
    std::vector<std::size_t> original_positions;
    std::vector<std::size_t> teleport_positions;

    std::string to_text() const;
    std::string to_json() const;
};

/// Runs both networks exactly and compares the original distribution to the
/// reduced one conditioned on all teleportation bits being 0.
ReductionReport verify_reduction(const NetworkSpec &spec);

}  // namespace qnet::reduction
