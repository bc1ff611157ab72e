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

#include "qnet/corpus.hpp"

#include <algorithm>
#include <numeric>

namespace qnet::corpus {

namespace {

std::size_t uniform(Rng &rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

std::string party_name(std::size_t i) {
    return std::string(1, static_cast<char>('A' + i));
}

/// Party list with empty circuits; vertices are filled in by the caller.
std::vector<Party> make_parties(std::size_t count) {
    std::vector<Party> parties;
    for (std::size_t i = 0; i < count; i++) {
        parties.push_back(Party{party_name(i), {}, 0, {}, std::nullopt});
    }
    return parties;
}

/// Sorts vertices and gives every party a random circuit over its qubits.
void finish(Rng &rng, NetworkSpec &spec, std::size_t max_gates) {
    for (auto &p : spec.parties) {
        std::sort(p.vertices.begin(), p.vertices.end());
    }
    for (std::size_t i = 0; i < spec.parties.size(); i++) {
        auto qubits = spec.party_qubits(i);
        if (!qubits.empty()) {
            spec.parties[i].circuit = random_circuit(rng, qubits, uniform(rng, 0, max_gates));
        }
    }
}

}  // namespace

CliffordCircuit random_circuit(Rng &rng, const std::vector<std::size_t> &qubits, std::size_t length) {
    CliffordCircuit c;
    if (qubits.empty()) {
        return c;
    }
    for (std::size_t i = 0; i < length; i++) {
        std::size_t kinds = qubits.size() > 1 ? 7 : 5;
        std::size_t a = qubits[uniform(rng, 0, qubits.size() - 1)];
        switch (uniform(rng, 0, kinds - 1)) {
            case 0:
                c.h(a);
                break;
            case 1:
                c.s(a);
                break;
            case 2:
                c.x(a);
                break;
            case 3:
                c.y(a);
                break;
            case 4:
                c.z(a);
                break;
            default: {
                std::size_t b = a;
                while (b == a) {
                    b = qubits[uniform(rng, 0, qubits.size() - 1)];
                }
                if (uniform(rng, 0, 1)) {
                    c.cx(a, b);
                } else {
                    c.cz(a, b);
                }
            }
        }
    }
    return c;
}

PureSource random_state(Rng &rng, std::size_t width, bool as_preparation) {
    std::vector<std::size_t> qubits(width);
    std::iota(qubits.begin(), qubits.end(), 0);
    CliffordCircuit prep = random_circuit(rng, qubits, 4 * width * width + 4);
    if (as_preparation) {
        return PureSource::from_preparation(width, prep);
    }
    return PureSource::from_generators(apply_circuit(zero_state(width), prep).stabilizers());
}

NetworkSpec random_canonical(Rng &rng) {
    NetworkSpec spec;
    std::size_t np = uniform(rng, 2, 4);
    spec.parties = make_parties(np);
    std::size_t v = 0;
    const std::vector<std::string> bell = {"+XX", "+ZZ"}, zero = {"+Z"};
    std::size_t bells = uniform(rng, 1, 4);
    for (std::size_t i = 0; i < bells; i++) {
        std::size_t a = uniform(rng, 0, np - 1), b = uniform(rng, 0, np - 2);
        b += b >= a;
        spec.edges.push_back(Edge{"e" + std::to_string(i), {v, v + 1}, Source::pure(PureSource::from_literals(bell))});
        spec.parties[a].vertices.push_back(v);
        spec.parties[b].vertices.push_back(v + 1);
        v += 2;
    }
    for (std::size_t p = 0; p < np; p++) {
        std::size_t degenerate = uniform(rng, 0, 2);
        for (std::size_t i = 0; i < degenerate; i++) {
            if (uniform(rng, 0, 1)) {
                spec.parties[p].ancillas++;
            } else {
                spec.edges.push_back(Edge{"z" + std::to_string(v), {v}, Source::pure(PureSource::from_literals(zero))});
                spec.parties[p].vertices.push_back(v++);
            }
        }
    }
    spec.num_vertices = v;
    finish(rng, spec, 40);
    return spec;
}

NetworkSpec random_bipartite(Rng &rng) {
    NetworkSpec spec;
    std::size_t np = uniform(rng, 2, 3);
    spec.parties = make_parties(np);
    std::size_t v = 0;
    std::size_t edges = uniform(rng, 1, 3);
    for (std::size_t i = 0; i < edges && v < 10; i++) {
        std::size_t a = uniform(rng, 0, np - 1), b = uniform(rng, 0, np - 2);
        b += b >= a;
        std::size_t l = uniform(rng, 1, 3), r = uniform(rng, 0, 3);
        std::vector<std::size_t> vertices;
        for (std::size_t j = 0; j < l + r; j++) {
            vertices.push_back(v + j);
            spec.parties[j < l ? a : b].vertices.push_back(v + j);
        }
        v += l + r;
        spec.edges.push_back(Edge{"e" + std::to_string(i), vertices,
                                  Source::pure(random_state(rng, l + r, uniform(rng, 0, 1) == 1))});
    }
    for (auto &p : spec.parties) {
        p.ancillas = uniform(rng, 0, 1);
    }
    spec.num_vertices = v;
    finish(rng, spec, 30);
    return spec;
}

NetworkSpec random_hyper(Rng &rng) {
    NetworkSpec spec;
    std::size_t np = uniform(rng, 3, 4);
    spec.parties = make_parties(np);
    std::size_t size = uniform(rng, 3, std::min<std::size_t>(4, np));
    std::vector<std::size_t> owners(np);
    std::iota(owners.begin(), owners.end(), 0);
    std::shuffle(owners.begin(), owners.end(), rng);
    std::vector<std::size_t> vertices;
    for (std::size_t j = 0; j < size; j++) {
        vertices.push_back(j);
        spec.parties[owners[j]].vertices.push_back(j);
    }
    PureSource hyper;
    if (uniform(rng, 0, 1)) {
        std::vector<PauliOperator> gens;
        PauliOperator all_x(size);
        for (std::size_t j = 0; j < size; j++) {
            all_x *= PauliOperator::single(size, j, 'X');
        }
        gens.push_back(all_x);
        for (std::size_t j = 0; j + 1 < size; j++) {
            gens.push_back(PauliOperator::single(size, j, 'Z') * PauliOperator::single(size, j + 1, 'Z'));
        }
        hyper = PureSource::from_generators(gens);
    } else {
        hyper = random_state(rng, size, uniform(rng, 0, 1) == 1);
    }
    spec.edges.push_back(Edge{"h", vertices, Source::pure(hyper)});
    std::size_t v = size;
    if (size == 3 && uniform(rng, 0, 1)) {
        std::size_t a = uniform(rng, 0, np - 1), b = uniform(rng, 0, np - 2);
        b += b >= a;
        spec.edges.push_back(Edge{"e", {v, v + 1}, Source::pure(random_state(rng, 2))});
        spec.parties[a].vertices.push_back(v);
        spec.parties[b].vertices.push_back(v + 1);
        v += 2;
    }
    spec.num_vertices = v;
    // Every party needs at least one qubit.
    for (auto &p : spec.parties) {
        if (p.vertices.empty()) {
            p.ancillas = 1;
        }
    }
    finish(rng, spec, 20);
    return spec;
}

NetworkSpec random_mixed(Rng &rng, std::size_t max_qubits) {
    NetworkSpec spec;
    std::size_t np = uniform(rng, 2, 3);
    spec.parties = make_parties(np);
    std::size_t v = 0;
    std::size_t edges = uniform(rng, 1, 3);
    for (std::size_t i = 0; i < edges; i++) {
        std::size_t width = uniform(rng, 1, 3);
        if (v + width + np > max_qubits) {
            break;
        }
        std::vector<std::size_t> vertices;
        for (std::size_t j = 0; j < width; j++) {
            vertices.push_back(v + j);
            spec.parties[uniform(rng, 0, np - 1)].vertices.push_back(v + j);
        }
        v += width;
        Source src;
        if (uniform(rng, 0, 1)) {
            std::size_t count = uniform(rng, 2, 3);
            std::vector<Rational> weights;
            std::size_t total = 0;
            for (std::size_t c = 0; c < count; c++) {
                weights.emplace_back(uniform(rng, 1, 5));
                total += weights.back().convert_to<std::size_t>();
            }
            std::string target = party_name(uniform(rng, 0, np - 1));
            std::vector<Component> comps;
            for (std::size_t c = 0; c < count; c++) {
                comps.push_back(Component{weights[c] / total, random_state(rng, width),
                                          {Label{target, std::string(1, static_cast<char>('a' + c))}}});
            }
            src = Source::mixture(std::move(comps));
        } else {
            src = Source::pure(random_state(rng, width, uniform(rng, 0, 1) == 1));
        }
        spec.edges.push_back(Edge{"e" + std::to_string(i), vertices, std::move(src)});
    }
    std::size_t room = max_qubits - v;
    for (auto &p : spec.parties) {
        if (room > 0 && (p.vertices.empty() || uniform(rng, 0, 2) == 0)) {
            p.ancillas = 1;
            room--;
        }
    }
    spec.num_vertices = v;
    // Parties without any qubit are fine: they still report their labels.
    finish(rng, spec, 30);
    return spec;
}

NetworkSpec ghz_triangle() {
    NetworkSpec spec;
    spec.num_vertices = 3;
    spec.parties = make_parties(3);
    spec.edges.push_back(Edge{"ghz", {0, 1, 2}, Source::pure(PureSource::from_literals({"+XXX", "+ZZI", "+IZZ"}))});
    for (std::size_t p = 0; p < 3; p++) {
        spec.parties[p].vertices = {p};
    }
    spec.parties[0].circuit = CliffordCircuit::parse("H 0");
    spec.parties[1].circuit = CliffordCircuit::parse("S 1;H 1");
    return spec;
}

}  // namespace qnet::corpus
