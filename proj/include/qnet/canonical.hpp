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
#include <utility>
#include <vector>

#include "qnet/circuit.hpp"
#include "qnet/network.hpp"

namespace qnet::canonical {

/// Local Cliffords taking a bipartite stabilizer state to Bell pairs plus |0>
/// qubits. All indices are local to the source (0..width-1).
struct BipartiteDecomposition {
    CliffordCircuit circuit_left;
    CliffordCircuit circuit_right;
    std::vector<std::pair<std::size_t, std::size_t>> pairing;  // (left qubit, right qubit)
    std::vector<std::size_t> zeros;

    std::size_t bell_count() const noexcept {
        return pairing.size();
    }
};

/// `left` and `right` must partition 0..src.width-1 (either may be empty).
/// Throws BadPartition otherwise.
BipartiteDecomposition decompose_bipartite(const PureSource &src, const std::vector<std::size_t> &left,
                                           const std::vector<std::size_t> &right);

struct Canonicalized {
    NetworkSpec spec;
    /// layout[i] is the position in the original outcome key of position i of
    /// the canonical spec's key.
    std::vector<std::size_t> layout;
};

/// Replaces every edge by Bell pairs and |0> vertices and every ancilla by a
/// |0> vertex, folding the inverse decomposition circuits into the parties.
/// Throws MixedSourcePresent or NotTwoNetwork.
Canonicalized canonicalize(const NetworkSpec &spec);

/// Reorders key characters: out key position i takes in key position layout[i].
OutcomeDistribution apply_layout(const OutcomeDistribution &d, const std::vector<std::size_t> &layout,
                                 std::vector<Segment> target_layout);

}  // namespace qnet::canonical
