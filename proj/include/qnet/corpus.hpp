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

#include <cstdint>
#include <random>

#include "qnet/network.hpp"

namespace qnet::corpus {

using Rng = std::mt19937_64;

/// Random Clifford circuit of `length` gates on the given qubits.
CliffordCircuit random_circuit(Rng &rng, const std::vector<std::size_t> &qubits, std::size_t length);

/// Random pure stabilizer state on `width` qubits, in generator form or as a
/// preparation circuit.
PureSource random_state(Rng &rng, std::size_t width, bool as_preparation = false);

/// 2-4 parties, 1-4 Bell edges between distinct parties, 0-2 degenerate
/// vertices per party (|0> vertices or ancillas), circuits of at most 40 gates.
NetworkSpec random_canonical(Rng &rng);

/// 2-network of random bipartite stabilizer sources (up to 3|3 qubits per
/// edge) with party ancillas.
NetworkSpec random_bipartite(Rng &rng);

/// Network with one hyperedge of size 3-4 (GHZ or random), possibly more edges.
NetworkSpec random_hyper(Rng &rng);

/// At most `max_qubits` qubits, pure and mixed sources, labels included.
NetworkSpec random_mixed(Rng &rng, std::size_t max_qubits = 12);

/// Three parties sharing one GHZ3 hyperedge.
NetworkSpec ghz_triangle();

}  // namespace qnet::corpus
