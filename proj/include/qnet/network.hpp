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
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qnet/circuit.hpp"
#include "qnet/distribution.hpp"
#include "qnet/pauli.hpp"
#include "qnet/rational.hpp"
#include "qnet/stabilizer.hpp"

namespace qnet {

/// A pure stabilizer state on an edge, given either by signed generators or
/// by a preparation circuit applied to |0...0>. Qubit indices are local to
/// the edge.
struct PureSource {
    enum class Form { Generators, Preparation };

    Form form = Form::Generators;
    std::size_t width = 0;
    std::vector<PauliOperator> generators;
    CliffordCircuit preparation;

    static PureSource from_generators(std::vector<PauliOperator> gens);
    static PureSource from_literals(const std::vector<std::string> &literals);
    static PureSource from_preparation(std::size_t width, CliffordCircuit prep);

    StabilizerTableau tableau() const;

    bool operator==(const PureSource &) const = default;
};

/// Classical symbols handed to a party whenever a mixture component is drawn.
struct Label {
    std::string party;
    std::string symbols;

    bool operator==(const Label &) const = default;
};

struct Component {
    Rational weight{1};
    PureSource state;
    std::vector<Label> labels;

    bool operator==(const Component &) const = default;
};

/// Pure sources hold exactly one component of weight 1 and no labels.
struct Source {
    bool mixed = false;
    std::vector<Component> components;

    static Source pure(PureSource state);
    static Source mixture(std::vector<Component> components);

    bool operator==(const Source &) const = default;
};

struct Edge {
    std::string name;
    std::vector<std::size_t> vertices;
    Source source;

    bool operator==(const Edge &) const = default;
};

/// Maps a party's raw segment (measured bits followed by its label symbols)
/// to the string it reports. Labels are appended again after the output.
struct PostTable {
    std::string path;
    std::map<std::string, std::string> entries;

    std::size_t output_width() const;
    bool operator==(const PostTable &) const = default;
};

struct Party {
    std::string name;
    std::vector<std::size_t> vertices;  // kept sorted
    std::size_t ancillas = 0;
    CliffordCircuit circuit;  // global qubit indices
    std::optional<PostTable> post;

    bool operator==(const Party &) const = default;
};

/// Hypergraph of sources and the parties holding its vertices. Qubits
/// 0..num_vertices-1 are the source vertices; ancillas follow, grouped by
/// party in party order.
struct NetworkSpec {
    std::size_t num_vertices = 0;
    std::vector<Edge> edges;
    std::vector<Party> parties;

    std::size_t num_ancillas() const;
    std::size_t num_qubits() const {
        return num_vertices + num_ancillas();
    }
    /// Global index of party p's first ancilla.
    std::size_t ancilla_offset(std::size_t p) const;
    /// Party p's qubits in outcome order: its vertices ascending, then its ancillas.
    std::vector<std::size_t> party_qubits(std::size_t p) const;
    /// Party owning each global qubit.
    std::vector<std::size_t> qubit_owner() const;
    std::optional<std::size_t> find_party(const std::string &name) const;

    bool has_mixed_source() const;
    /// Label symbols each party receives per component draw, summed over edges.
    std::vector<std::size_t> label_widths() const;
    /// Key layout of the distributions this spec produces.
    std::vector<Segment> outcome_layout() const;
    /// Product of the party circuits, in party order.
    CliffordCircuit global_circuit() const;
    /// Number of pure runs run_quantum performs.
    std::size_t component_count() const;

    bool operator==(const NetworkSpec &) const = default;
};

/// Checks every structural invariant and returns k, the largest number of
/// distinct parties any single edge reaches (through vertices or labels).
std::size_t validate(const NetworkSpec &spec);

/// Turns per-qubit outcomes plus the per-party labels of a component draw
/// into a key, applying post tables.
std::string assemble_key(const NetworkSpec &spec, const BitVec &qubit_outcomes,
                         const std::vector<std::string> &party_labels);

/// Maps a distribution over raw measured bits (one segment per party, raw
/// widths, no labels) through the spec's post tables.
OutcomeDistribution apply_post_tables(const NetworkSpec &spec, const OutcomeDistribution &raw);

/// Exact correlation of the network: every mixture draw is run through the
/// stabilizer engine and the results combined with their weights.
OutcomeDistribution run_quantum(const NetworkSpec &spec);

/// Calls `visit(weight, states, labels)` for each draw of one component per
/// edge. `states[e]` is the drawn state of edge e and `labels[p]` the symbols
/// party p receives.
void for_each_draw(const NetworkSpec &spec,
                   const std::function<void(const Rational &, const std::vector<const PureSource *> &,
                                            const std::vector<std::string> &)> &visit);

}  // namespace qnet
