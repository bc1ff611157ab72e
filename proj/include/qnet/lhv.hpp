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
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qnet/distribution.hpp"
#include "qnet/network.hpp"
#include "qnet/pauli.hpp"
#include "qnet/rational.hpp"
#include "qnet/stabilizer.hpp"

namespace qnet::lhv {

/// Shared randomness of one source. Bell slots carry (X, Y, Z) bits; a
/// degenerate slot (a |0> vertex or an ancilla) carries (X, Y) with Z fixed to 0.
struct HiddenSlot {
    std::string name;
    bool degenerate = false;
    std::vector<std::size_t> qubits;   // global qubit indices
    std::vector<std::size_t> parties;  // parties holding those qubits

    bool operator==(const HiddenSlot &) const = default;
};

struct Term {
    std::size_t slot;
    char axis;  // 'X', 'Y' or 'Z'

    bool operator==(const Term &) const = default;
};

/// Output bit = constant XOR (sum of the referenced slot bits) mod 2.
struct ResponseFunction {
    std::size_t qubit;  // global index of the measured qubit this output simulates
    std::size_t party;
    bool constant = false;
    std::vector<Term> terms;

    bool operator==(const ResponseFunction &) const = default;
};

struct LocalModel {
    std::vector<HiddenSlot> slots;
    std::vector<ResponseFunction> outputs;  // outcome-key order
    std::vector<Segment> layout;            // raw per-party widths
    PauliOperator g0;

    /// Declarations first (parties, slots, g0), then one `out` line per output.
    std::string serialize() const;
    static LocalModel parse(std::string_view text);

    bool operator==(const LocalModel &) const = default;
};

enum class Variant {
    /// Independent uniform (X, Y, Z) per Bell slot, (X, Y) per degenerate slot.
    Trio,
    /// Uniform (X, Z); Y is their product as +-1 values, i.e. X xor Z.
    TwoBit,
};

inline constexpr std::uint64_t kDefaultEnumerationBound = std::uint64_t{1} << 30;
inline constexpr std::size_t kDefaultSpectrumBound = 24;

/// Bell pairs and degenerate qubits of a canonical spec.
struct CanonicalStructure {
    std::vector<std::pair<std::size_t, std::size_t>> bell_pairs;
    std::vector<std::string> bell_names;
    std::vector<std::size_t> degenerate;
};

/// Throws MixedSourcePresent or NotCanonical.
CanonicalStructure canonical_structure(const NetworkSpec &spec);

/// Stabilizer group of the Bell pairs with +Z on every degenerate qubit.
StabilizerTableau network_state(const NetworkSpec &spec, const CanonicalStructure &structure);

/// g_k = U^dagger Z_k U for the product U of all party circuits, one per qubit.
std::vector<PauliOperator> conjugated_observables(const NetworkSpec &spec);

/// Basis (as subsets of output indices) of {S : +-g_S in stab}.
std::vector<BitVec> stabilized_subsets(const std::vector<PauliOperator> &gs, const StabilizerTableau &stab);

/// Signed product of g_k over the subset.
PauliOperator subset_product(const std::vector<PauliOperator> &gs, const BitVec &subset);

/// A Pauli that commutes with g_S when +g_S is stabilized and anticommutes
/// when -g_S is. Lexicographically smallest in (x bits, z bits) order.
PauliOperator sign_fixing_pauli(const std::vector<PauliOperator> &gs, const StabilizerTableau &stab);

LocalModel synthesize(const NetworkSpec &spec);

/// Exact distribution of the model's raw outputs by exhaustive enumeration of
/// the hidden variables. Throws EnumerationTooLarge above `bound` assignments.
OutcomeDistribution evaluate(const LocalModel &model, Variant variant = Variant::TwoBit,
                             std::uint64_t bound = kDefaultEnumerationBound);

/// Model distribution with the spec's post tables applied, comparable to run_quantum(spec).
OutcomeDistribution evaluate_for(const NetworkSpec &spec, const LocalModel &model, Variant variant = Variant::TwoBit,
                                 std::uint64_t bound = kDefaultEnumerationBound);

/// Number of hidden-variable assignments the variant enumerates.
std::uint64_t assignment_count(const LocalModel &model, Variant variant);

/// Every output reads only slots that touch its own party.
bool respects_locality(const LocalModel &model);

/// Pr{XOR_{i in S} b_i = 0} for every subset S, indexed by the mask with bit i
/// set when position i is in S.
std::vector<Rational> parity_spectrum(const OutcomeDistribution &d, std::size_t bound = kDefaultSpectrumBound);

/// Distribution equality decided through parity spectra.
bool equal_distributions(const OutcomeDistribution &a, const OutcomeDistribution &b,
                         std::size_t bound = kDefaultSpectrumBound);

/// Key-by-key exact comparison.
bool equal_direct(const OutcomeDistribution &a, const OutcomeDistribution &b);

}  // namespace qnet::lhv
