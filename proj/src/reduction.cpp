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

#include "qnet/reduction.hpp"

#include <json.hpp>
#include <set>
#include <sstream>

#include "qnet/error.hpp"

namespace qnet::reduction {

Reduced teleport_reduce(const NetworkSpec &spec) {
    validate(spec);
    std::size_t n = spec.num_vertices;
    std::size_t total = 0;
    for (const auto &e : spec.edges) {
        total += e.vertices.size();
    }
    std::size_t shift = 2 * total;

    Reduced out;
    out.teleported_qubits = total;
    NetworkSpec &r = out.spec;
    r.num_vertices = n + shift;

    // Original parties keep their vertices; ancillas move past the new block.
    std::vector<std::size_t> remap(spec.num_qubits());
    for (std::size_t q = 0; q < remap.size(); q++) {
        remap[q] = q < n ? q : q + shift;
    }
    std::set<std::string> names;
    for (const auto &p : spec.parties) {
        Party c = p;
        c.circuit = p.circuit.remapped(remap);
        names.insert(p.name);
        r.parties.push_back(std::move(c));
    }

    const std::vector<std::string> bell = {"+XX", "+ZZ"};
    std::size_t next = n;
    for (const auto &e : spec.edges) {
        std::size_t m = e.vertices.size();
        std::vector<std::size_t> s(m), t(m);
        for (std::size_t j = 0; j < m; j++) {
            s[j] = next + j;
            t[j] = next + m + j;
        }
        next += 2 * m;
        r.edges.push_back(Edge{e.name, s, e.source});
        for (std::size_t j = 0; j < m; j++) {
            r.edges.push_back(Edge{e.name + ".t" + std::to_string(j), {t[j], e.vertices[j]},
                                   Source::pure(PureSource::from_literals(bell))});
        }
        std::string name = "C_" + e.name;
        while (names.count(name)) {
            name += "_";
        }
        names.insert(name);
        Party c{name, {}, 0, {}, std::nullopt};
        for (std::size_t j = 0; j < m; j++) {
            c.circuit.cx(s[j], t[j]).h(s[j]);
        }
        c.vertices = s;
        c.vertices.insert(c.vertices.end(), t.begin(), t.end());
        r.parties.push_back(std::move(c));
    }

    // The original parties' segments come first and are unchanged in width.
    std::size_t original_length = 0;
    for (const auto &seg : spec.outcome_layout()) {
        original_length += seg.width;
    }
    for (std::size_t i = 0; i < original_length; i++) {
        out.original_positions.push_back(i);
    }
    for (std::size_t i = 0; i < 2 * total; i++) {
        out.teleport_positions.push_back(original_length + i);
    }
    std::size_t k = validate(r);
    if (k > 2) {
        throw Error(ErrorKind::Infeasible, "reduced network still has k=" + std::to_string(k));
    }
    return out;
}

ReductionReport verify_reduction(const NetworkSpec &spec) {
    ReductionReport rep;
    rep.k_before = validate(spec);
    rep.extension = spec.has_mixed_source();
    Reduced red = teleport_reduce(spec);
    rep.k_after = validate(red.spec);
    rep.original_positions = red.original_positions;
    rep.teleport_positions = red.teleport_positions;
    rep.expected_prob = Rational(1);
    for (std::size_t i = 0; i < red.teleported_qubits; i++) {
        rep.expected_prob /= 4;
    }

    OutcomeDistribution original = run_quantum(spec);
    OutcomeDistribution reduced = run_quantum(red.spec);
    auto [conditioned, prob] =
        condition(reduced, red.teleport_positions, std::string(red.teleport_positions.size(), '0'));
    rep.postselect_prob = prob;
    OutcomeDistribution kept = marginal(conditioned, red.original_positions);
    rep.equal = kept.entries() == original.entries();
    return rep;
}

std::string ReductionReport::to_text() const {
    std::ostringstream os;
    os << "equal: " << (equal ? "true" : "false") << "\n";
    os << "postselect_prob " << to_string(postselect_prob) << "\n";
    os << "expected_prob " << to_string(expected_prob) << "\n";
    os << "k_before " << k_before << "\n";
    os << "k_after " << k_after << "\n";
    if (extension) {
        os << "note: extension (mixed sources)\n";
    }
    return os.str();
}

std::string ReductionReport::to_json() const {
    nlohmann::ordered_json j;
    j["equal"] = equal;
    j["postselect_prob"] = to_string(postselect_prob);
    j["expected_prob"] = to_string(expected_prob);
    j["k_before"] = k_before;
    j["k_after"] = k_after;
    j["extension"] = extension;
    j["mapping"] = {{"original_positions", original_positions}, {"teleport_positions", teleport_positions}};
    return j.dump(2) + "\n";
}

}  // namespace qnet::reduction
