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

#include "qnet/network.hpp"

#include <algorithm>
#include <set>

#include "qnet/error.hpp"

namespace qnet {

PureSource PureSource::from_generators(std::vector<PauliOperator> gens) {
    PureSource s;
    s.form = Form::Generators;
    s.width = gens.empty() ? 0 : gens[0].size();
    s.generators = std::move(gens);
    return s;
}

PureSource PureSource::from_literals(const std::vector<std::string> &literals) {
    std::vector<PauliOperator> gens;
    for (const auto &lit : literals) {
        gens.push_back(PauliOperator::parse(lit));
    }
    return from_generators(std::move(gens));
}

PureSource PureSource::from_preparation(std::size_t width, CliffordCircuit prep) {
    PureSource s;
    s.form = Form::Preparation;
    s.width = width;
    s.preparation = std::move(prep);
    return s;
}

StabilizerTableau PureSource::tableau() const {
    if (form == Form::Preparation) {
        return apply_circuit(zero_state(width), preparation);
    }
    return StabilizerTableau::from_generators(generators);
}

Source Source::pure(PureSource state) {
    Source s;
    s.mixed = false;
    s.components.push_back(Component{Rational(1), std::move(state), {}});
    return s;
}

Source Source::mixture(std::vector<Component> components) {
    Source s;
    s.mixed = true;
    s.components = std::move(components);
    return s;
}

std::size_t PostTable::output_width() const {
    return entries.empty() ? 0 : entries.begin()->second.size();
}

std::size_t NetworkSpec::num_ancillas() const {
    std::size_t m = 0;
    for (const auto &p : parties) {
        m += p.ancillas;
    }
    return m;
}

std::size_t NetworkSpec::ancilla_offset(std::size_t p) const {
    std::size_t off = num_vertices;
    for (std::size_t i = 0; i < p; i++) {
        off += parties[i].ancillas;
    }
    return off;
}

std::vector<std::size_t> NetworkSpec::party_qubits(std::size_t p) const {
    std::vector<std::size_t> qs = parties.at(p).vertices;
    std::sort(qs.begin(), qs.end());
    std::size_t off = ancilla_offset(p);
    for (std::size_t a = 0; a < parties[p].ancillas; a++) {
        qs.push_back(off + a);
    }
    return qs;
}

std::vector<std::size_t> NetworkSpec::qubit_owner() const {
    std::vector<std::size_t> owner(num_qubits(), parties.size());
    for (std::size_t p = 0; p < parties.size(); p++) {
        for (auto q : party_qubits(p)) {
            if (q < owner.size()) {
                owner[q] = p;
            }
        }
    }
    return owner;
}

std::optional<std::size_t> NetworkSpec::find_party(const std::string &name) const {
    for (std::size_t p = 0; p < parties.size(); p++) {
        if (parties[p].name == name) {
            return p;
        }
    }
    return std::nullopt;
}

bool NetworkSpec::has_mixed_source() const {
    return std::any_of(edges.begin(), edges.end(), [](const Edge &e) { return e.source.mixed; });
}

std::vector<std::size_t> NetworkSpec::label_widths() const {
    std::vector<std::size_t> widths(parties.size(), 0);
    for (const auto &e : edges) {
        if (e.source.components.empty()) {
            continue;
        }
        for (const auto &l : e.source.components.front().labels) {
            if (auto p = find_party(l.party)) {
                widths[*p] += l.symbols.size();
            }
        }
    }
    return widths;
}

std::vector<Segment> NetworkSpec::outcome_layout() const {
    auto labels = label_widths();
    std::vector<Segment> layout;
    for (std::size_t p = 0; p < parties.size(); p++) {
        std::size_t raw = parties[p].vertices.size() + parties[p].ancillas;
        std::size_t reported = parties[p].post ? parties[p].post->output_width() : raw;
        layout.push_back(Segment{parties[p].name, reported + labels[p]});
    }
    return layout;
}

CliffordCircuit NetworkSpec::global_circuit() const {
    CliffordCircuit c;
    for (const auto &p : parties) {
        c.append(p.circuit);
    }
    return c;
}

std::size_t NetworkSpec::component_count() const {
    std::size_t count = 1;
    for (const auto &e : edges) {
        count *= e.source.components.size();
    }
    return count;
}

namespace {

std::string edge_label(const Edge &e, std::size_t i) {
    return e.name.empty() ? "#" + std::to_string(i) : "'" + e.name + "'";
}

void validate_pure(const PureSource &s, const Edge &e, std::size_t i) {
    if (s.width != e.vertices.size()) {
        throw Error(ErrorKind::WrongCount, "edge " + edge_label(e, i) + " has " + std::to_string(e.vertices.size()) +
                                               " vertices but its state has width " + std::to_string(s.width));
    }
    if (s.form == PureSource::Form::Generators) {
        for (const auto &g : s.generators) {
            if (g.size() != s.width) {
                throw Error(ErrorKind::WrongCount, "edge " + edge_label(e, i) + ": generator " + g.str() +
                                                       " does not match width " + std::to_string(s.width));
            }
        }
        if (s.generators.size() != s.width) {
            throw Error(ErrorKind::WrongCount, "edge " + edge_label(e, i) + " lists " +
                                                   std::to_string(s.generators.size()) + " generators for " +
                                                   std::to_string(s.width) + " qubits");
        }
    } else if (s.preparation.width() > s.width) {
        throw Error(ErrorKind::IndexOutOfRange,
                    "edge " + edge_label(e, i) + ": preparation circuit exceeds width " + std::to_string(s.width));
    }
    (void)s.tableau();
}

}  // namespace

std::size_t validate(const NetworkSpec &spec) {
    std::size_t n = spec.num_vertices;
    std::vector<int> edge_of(n, -1);
    std::set<std::string> edge_names;
    for (std::size_t i = 0; i < spec.edges.size(); i++) {
        const Edge &e = spec.edges[i];
        if (!e.name.empty() && !edge_names.insert(e.name).second) {
            throw Error(ErrorKind::OverlappingEdges, "edge name '" + e.name + "' used twice");
        }
        if (e.vertices.empty()) {
            throw Error(ErrorKind::WrongCount, "edge " + edge_label(e, i) + " has no vertices");
        }
        for (auto v : e.vertices) {
            if (v >= n) {
                throw Error(ErrorKind::IndexOutOfRange, "edge " + edge_label(e, i) + " uses vertex " +
                                                            std::to_string(v) + " >= " + std::to_string(n));
            }
            if (edge_of[v] >= 0) {
                throw Error(ErrorKind::OverlappingEdges,
                            "vertex " + std::to_string(v) + " is in edges " +
                                edge_label(spec.edges[static_cast<std::size_t>(edge_of[v])],
                                           static_cast<std::size_t>(edge_of[v])) +
                                " and " + edge_label(e, i));
            }
            edge_of[v] = static_cast<int>(i);
        }
    }
    for (std::size_t v = 0; v < n; v++) {
        if (edge_of[v] < 0) {
            throw Error(ErrorKind::UncoveredVertex, "vertex " + std::to_string(v) + " belongs to no edge");
        }
    }

    std::vector<int> party_of(n, -1);
    std::set<std::string> party_names;
    for (std::size_t p = 0; p < spec.parties.size(); p++) {
        const Party &party = spec.parties[p];
        if (!party_names.insert(party.name).second) {
            throw Error(ErrorKind::OverlappingParties, "party name '" + party.name + "' used twice");
        }
        for (auto v : party.vertices) {
            if (v >= n) {
                throw Error(ErrorKind::IndexOutOfRange, "party '" + party.name + "' owns vertex " +
                                                            std::to_string(v) + " >= " + std::to_string(n));
            }
            if (party_of[v] >= 0) {
                throw Error(ErrorKind::OverlappingParties,
                            "vertex " + std::to_string(v) + " is owned by parties '" +
                                spec.parties[static_cast<std::size_t>(party_of[v])].name + "' and '" + party.name +
                                "'");
            }
            party_of[v] = static_cast<int>(p);
        }
    }
    for (std::size_t v = 0; v < n; v++) {
        if (party_of[v] < 0) {
            throw Error(ErrorKind::UncoveredVertex, "vertex " + std::to_string(v) + " is owned by no party");
        }
    }

    for (std::size_t p = 0; p < spec.parties.size(); p++) {
        auto qs = spec.party_qubits(p);
        std::set<std::size_t> allowed(qs.begin(), qs.end());
        for (const Gate &g : spec.parties[p].circuit.gates()) {
            bool ok = allowed.count(g.a) && (!g.is_two_qubit() || allowed.count(g.b));
            if (!ok) {
                throw Error(ErrorKind::CircuitOutOfScope,
                            "party '" + spec.parties[p].name + "' gate '" + g.str() + "' touches a foreign qubit");
            }
        }
    }

    std::size_t k = 0;
    for (std::size_t i = 0; i < spec.edges.size(); i++) {
        const Edge &e = spec.edges[i];
        const auto &comps = e.source.components;
        if (comps.empty()) {
            throw Error(ErrorKind::BadWeights, "edge " + edge_label(e, i) + " has no source components");
        }
        Rational total = 0;
        for (const auto &c : comps) {
            if (c.weight <= 0) {
                throw Error(ErrorKind::BadWeights,
                            "edge " + edge_label(e, i) + " has non-positive weight " + to_string(c.weight));
            }
            total += c.weight;
            validate_pure(c.state, e, i);
        }
        if (total != 1) {
            throw Error(ErrorKind::BadWeights,
                        "edge " + edge_label(e, i) + " weights sum to " + to_string(total) + ", not 1");
        }
        if (!e.source.mixed && (comps.size() != 1 || !comps[0].labels.empty())) {
            throw Error(ErrorKind::BadWeights, "pure edge " + edge_label(e, i) + " must have one unlabeled state");
        }

        std::set<std::size_t> reached;
        for (auto v : e.vertices) {
            reached.insert(static_cast<std::size_t>(party_of[v]));
        }
        const auto &first = comps.front().labels;
        for (const auto &c : comps) {
            if (c.labels.size() != first.size()) {
                throw Error(ErrorKind::BadLabels, "edge " + edge_label(e, i) + " labels differ between components");
            }
            for (std::size_t l = 0; l < c.labels.size(); l++) {
                if (c.labels[l].party != first[l].party || c.labels[l].symbols.size() != first[l].symbols.size()) {
                    throw Error(ErrorKind::BadLabels,
                                "edge " + edge_label(e, i) + " labels differ between components");
                }
                auto p = spec.find_party(c.labels[l].party);
                if (!p) {
                    throw Error(ErrorKind::BadLabels, "edge " + edge_label(e, i) + " labels unknown party '" +
                                                          c.labels[l].party + "'");
                }
                reached.insert(*p);
            }
        }
        k = std::max(k, reached.size());
    }

    auto labels = spec.label_widths();
    for (std::size_t p = 0; p < spec.parties.size(); p++) {
        const auto &post = spec.parties[p].post;
        if (!post) {
            continue;
        }
        std::size_t in_width = spec.parties[p].vertices.size() + spec.parties[p].ancillas + labels[p];
        for (const auto &[in, out] : post->entries) {
            if (in.size() != in_width || out.size() != post->output_width()) {
                throw Error(ErrorKind::ShapeMismatch,
                            "party '" + spec.parties[p].name + "' post entry '" + in + "' -> '" + out +
                                "' does not fit the party's segment");
            }
        }
    }
    return k;
}

std::string assemble_key(const NetworkSpec &spec, const BitVec &qubit_outcomes,
                         const std::vector<std::string> &party_labels) {
    std::string key;
    for (std::size_t p = 0; p < spec.parties.size(); p++) {
        std::string raw;
        for (auto q : spec.party_qubits(p)) {
            raw.push_back(qubit_outcomes.get(q) ? '1' : '0');
        }
        const std::string &labels = party_labels.empty() ? std::string() : party_labels[p];
        if (const auto &post = spec.parties[p].post) {
            auto it = post->entries.find(raw + labels);
            if (it == post->entries.end()) {
                throw Error(ErrorKind::MissingPostEntry,
                            "party '" + spec.parties[p].name + "' has no post entry for '" + raw + labels + "'");
            }
            key += it->second;
        } else {
            key += raw;
        }
        key += labels;
    }
    return key;
}

OutcomeDistribution apply_post_tables(const NetworkSpec &spec, const OutcomeDistribution &raw) {
    if (spec.has_mixed_source()) {
        throw Error(ErrorKind::MixedSourcePresent, "post tables on raw bits need a spec without labels");
    }
    std::size_t n = spec.num_qubits();
    if (raw.key_length() != n) {
        throw Error(ErrorKind::ShapeMismatch, "raw distribution has key length " + std::to_string(raw.key_length()) +
                                                  ", spec has " + std::to_string(n) + " qubits");
    }
    std::vector<std::size_t> position_to_qubit;
    for (std::size_t p = 0; p < spec.parties.size(); p++) {
        for (auto q : spec.party_qubits(p)) {
            position_to_qubit.push_back(q);
        }
    }
    OutcomeDistribution out(spec.outcome_layout());
    for (const auto &[key, prob] : raw.entries()) {
        BitVec bits(n);
        for (std::size_t i = 0; i < key.size(); i++) {
            bits.set(position_to_qubit[i], key[i] == '1');
        }
        out.add(assemble_key(spec, bits, {}), prob);
    }
    return out;
}

void for_each_draw(const NetworkSpec &spec,
                   const std::function<void(const Rational &, const std::vector<const PureSource *> &,
                                            const std::vector<std::string> &)> &visit) {
    std::size_t num_edges = spec.edges.size();
    std::vector<std::size_t> choice(num_edges, 0);
    std::vector<const PureSource *> states(num_edges);
    while (true) {
        Rational weight = 1;
        std::vector<std::string> labels(spec.parties.size());
        for (std::size_t e = 0; e < num_edges; e++) {
            const Component &c = spec.edges[e].source.components[choice[e]];
            weight *= c.weight;
            states[e] = &c.state;
            for (const auto &l : c.labels) {
                labels[*spec.find_party(l.party)] += l.symbols;
            }
        }
        visit(weight, states, labels);

        // Odometer over component indices, last edge fastest.
        std::size_t e = num_edges;
        while (e > 0) {
            e--;
            if (++choice[e] < spec.edges[e].source.components.size()) {
                break;
            }
            choice[e] = 0;
            if (e == 0) {
                return;
            }
        }
        if (num_edges == 0) {
            return;
        }
    }
}

OutcomeDistribution run_quantum(const NetworkSpec &spec) {
    validate(spec);
    std::size_t n = spec.num_qubits();

    // Tableaus are built once per component, not once per draw.
    std::map<const PureSource *, StabilizerTableau> cache;
    for (const auto &e : spec.edges) {
        for (const auto &c : e.source.components) {
            cache.emplace(&c.state, c.state.tableau());
        }
    }
    StabilizerTableau ancilla_state = zero_state(1);
    std::vector<std::vector<std::size_t>> positions;
    for (const auto &e : spec.edges) {
        positions.push_back(e.vertices);
    }
    for (std::size_t q = spec.num_vertices; q < n; q++) {
        positions.push_back({q});
    }
    CliffordCircuit circuit = spec.global_circuit();

    OutcomeDistribution out(spec.outcome_layout());
    for_each_draw(spec, [&](const Rational &weight, const std::vector<const PureSource *> &states,
                            const std::vector<std::string> &labels) {
        std::vector<const StabilizerTableau *> parts;
        for (const auto *s : states) {
            parts.push_back(&cache.at(s));
        }
        for (std::size_t q = spec.num_vertices; q < n; q++) {
            parts.push_back(&ancilla_state);
        }
        StabilizerTableau state = apply_circuit(embed_tableaus(n, parts, positions), circuit);
        AffineSubspace support = z_support(state);
        Rational p = weight * dyadic(support.dimension());
        support.for_each_point([&](const BitVec &b) { out.add(assemble_key(spec, b, labels), p); });
    });
    return out;
}

}  // namespace qnet
