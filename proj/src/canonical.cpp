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

#include "qnet/canonical.hpp"

#include <algorithm>
#include <set>

#include "qnet/error.hpp"

namespace qnet::canonical {

namespace {

/// Generator list under construction plus the gates applied so far, split by side.
class Workspace {
   public:
    Workspace(std::vector<PauliOperator> rows, const std::vector<std::size_t> &left)
        : rows_(std::move(rows)), on_left_(rows_.empty() ? 0 : rows_[0].size(), false) {
        for (auto q : left) {
            on_left_[q] = true;
        }
    }

    std::vector<PauliOperator> &rows() {
        return rows_;
    }

    void gate(const Gate &g) {
        for (auto &r : rows_) {
            switch (g.kind) {
                case GateKind::H:
                    r.apply_h(g.a);
                    break;
                case GateKind::S:
                    r.apply_s(g.a);
                    break;
                case GateKind::X:
                    r.apply_x(g.a);
                    break;
                case GateKind::Z:
                    r.apply_z(g.a);
                    break;
                case GateKind::CX:
                    r.apply_cx(g.a, g.b);
                    break;
                default:
                    throw Error(ErrorKind::Infeasible, "unexpected synthesis gate");
            }
        }
        (on_left_[g.a] ? left_ : right_).append(g);
    }

    /// Gates on `qubits` turning `p` (supported there) into Z on its first
    /// supported qubit, which is returned.
    std::size_t to_single_z(PauliOperator p, const std::vector<std::size_t> &qubits) {
        std::vector<std::size_t> support;
        for (auto q : qubits) {
            if (p.x(q) || p.z(q)) {
                support.push_back(q);
            }
        }
        if (support.empty()) {
            throw Error(ErrorKind::Infeasible, "cannot reduce the identity");
        }
        for (auto q : support) {
            if (p.x(q) && p.z(q)) {
                apply_both(Gate{GateKind::S, q}, p);
                apply_both(Gate{GateKind::H, q}, p);
            } else if (p.x(q)) {
                apply_both(Gate{GateKind::H, q}, p);
            }
        }
        std::size_t a = support[0];
        for (std::size_t i = 1; i < support.size(); i++) {
            apply_both(Gate{GateKind::CX, support[i], a}, p);
        }
        return a;
    }

    /// With `zp` already Z_a, turns the anticommuting `xp` into X_a without
    /// disturbing Z_a.
    void to_single_x(PauliOperator xp, std::size_t a, const std::vector<std::size_t> &qubits) {
        if (xp.z(a)) {
            apply_both(Gate{GateKind::S, a}, xp);
        }
        std::vector<std::size_t> rest;
        for (auto q : qubits) {
            if (q == a || !(xp.x(q) || xp.z(q))) {
                continue;
            }
            if (xp.x(q) && xp.z(q)) {
                apply_both(Gate{GateKind::S, q}, xp);
            } else if (xp.z(q)) {
                apply_both(Gate{GateKind::H, q}, xp);
            }
            rest.push_back(q);
        }
        for (auto q : rest) {
            apply_both(Gate{GateKind::CX, a, q}, xp);
        }
    }

    CliffordCircuit &left() {
        return left_;
    }
    CliffordCircuit &right() {
        return right_;
    }

   private:
    void apply_both(const Gate &g, PauliOperator &tracked) {
        gate(g);
        PauliOperator copy = tracked;
        CliffordCircuit one;
        one.append(g);
        tracked = conjugate(copy, one);
    }

    std::vector<PauliOperator> rows_;
    std::vector<bool> on_left_;
    CliffordCircuit left_;
    CliffordCircuit right_;
};

bool supported_on(const PauliOperator &p, const std::vector<std::size_t> &qubits) {
    for (auto q : qubits) {
        if (p.x(q) || p.z(q)) {
            return true;
        }
    }
    return false;
}

/// Index of an active row supported only on `side` after row reduction on the
/// other side's columns, or rows.size() if there is none.
std::size_t find_local_row(std::vector<PauliOperator> &rows, std::vector<bool> &active,
                           const std::vector<std::size_t> &other) {
    std::vector<std::size_t> live;
    for (std::size_t i = 0; i < rows.size(); i++) {
        if (active[i]) {
            live.push_back(i);
        }
    }
    std::size_t r = 0;
    for (auto q : other) {
        for (int part = 0; part < 2; part++) {
            auto bit = [&](std::size_t i) { return part == 0 ? rows[i].x(q) : rows[i].z(q); };
            std::size_t pivot = r;
            while (pivot < live.size() && !bit(live[pivot])) {
                pivot++;
            }
            if (pivot == live.size()) {
                continue;
            }
            std::swap(live[r], live[pivot]);
            for (std::size_t j = 0; j < live.size(); j++) {
                if (j != r && bit(live[j])) {
                    rows[live[j]] *= rows[live[r]];
                }
            }
            r++;
        }
    }
    return r < live.size() ? live[r] : rows.size();
}

}  // namespace

BipartiteDecomposition decompose_bipartite(const PureSource &src, const std::vector<std::size_t> &left,
                                           const std::vector<std::size_t> &right) {
    std::size_t n = src.width;
    std::vector<int> seen(n, 0);
    for (auto q : left) {
        if (q >= n || seen[q]++) {
            throw Error(ErrorKind::BadPartition, "left side repeats or exceeds qubit " + std::to_string(q));
        }
    }
    for (auto q : right) {
        if (q >= n || seen[q]++) {
            throw Error(ErrorKind::BadPartition, "right side repeats or exceeds qubit " + std::to_string(q));
        }
    }
    if (left.size() + right.size() != n) {
        throw Error(ErrorKind::BadPartition, "sides do not cover all " + std::to_string(n) + " qubits");
    }

    StabilizerTableau t = src.tableau();
    Workspace ws(t.stabilizers(), left);
    auto &rows = ws.rows();
    std::vector<bool> active(rows.size(), true);
    std::vector<std::size_t> live_left = left, live_right = right;
    BipartiteDecomposition out;

    auto retire = [&](std::size_t row, std::size_t qubit) {
        // rows[row] is +Z_qubit, or the X half of a Bell pair handled by the caller.
        for (std::size_t i = 0; i < rows.size(); i++) {
            if (i != row && active[i] && rows[i].z(qubit)) {
                rows[i] *= rows[row];
            }
        }
        active[row] = false;
    };
    auto erase = [](std::vector<std::size_t> &v, std::size_t q) { v.erase(std::find(v.begin(), v.end(), q)); };

    while (std::find(active.begin(), active.end(), true) != active.end()) {
        bool progressed = false;
        for (int side = 0; side < 2 && !progressed; side++) {
            auto &mine = side == 0 ? live_left : live_right;
            auto &other = side == 0 ? live_right : live_left;
            std::size_t row = find_local_row(rows, active, other);
            if (row == rows.size()) {
                continue;
            }
            std::size_t a = ws.to_single_z(rows[row], mine);
            if (rows[row].sign() < 0) {
                ws.gate(Gate{GateKind::X, a});
            }
            retire(row, a);
            erase(mine, a);
            out.zeros.push_back(a);
            progressed = true;
        }
        if (progressed) {
            continue;
        }

        // No local elements remain: both restrictions are full-rank, so some
        // row's left part anticommutes with the first row's left part.
        std::size_t g1 = std::find(active.begin(), active.end(), true) - active.begin();
        PauliOperator g1_left = rows[g1].restricted(live_left);
        std::size_t g2 = rows.size();
        for (std::size_t i = 0; i < rows.size(); i++) {
            if (active[i] && i != g1 && !commutes(g1_left, rows[i].restricted(live_left))) {
                g2 = i;
                break;
            }
        }
        if (g2 == rows.size() || !supported_on(rows[g1], live_right)) {
            throw Error(ErrorKind::Infeasible, "no anticommuting partner while extracting a Bell pair");
        }
        auto only = [&](const PauliOperator &p, const std::vector<std::size_t> &qs) {
            PauliOperator r(n);
            for (auto q : qs) {
                if (p.x(q)) {
                    r = r * PauliOperator::single(n, q, 'X');
                }
                if (p.z(q)) {
                    r = r * PauliOperator::single(n, q, 'Z');
                }
            }
            return r;
        };
        std::size_t a = ws.to_single_z(only(rows[g2], live_left), live_left);
        ws.to_single_x(only(rows[g1], live_left), a, live_left);
        std::size_t b = ws.to_single_z(only(rows[g2], live_right), live_right);
        ws.to_single_x(only(rows[g1], live_right), b, live_right);
        if (rows[g1].sign() < 0) {
            ws.gate(Gate{GateKind::Z, a});
        }
        if (rows[g2].sign() < 0) {
            ws.gate(Gate{GateKind::X, a});
        }
        for (std::size_t i = 0; i < rows.size(); i++) {
            if (i == g1 || i == g2 || !active[i]) {
                continue;
            }
            if (rows[i].x(a)) {
                rows[i] *= rows[g1];
            }
            if (rows[i].z(a)) {
                rows[i] *= rows[g2];
            }
        }
        active[g1] = active[g2] = false;
        erase(live_left, a);
        erase(live_right, b);
        out.pairing.emplace_back(a, b);
    }

    out.circuit_left = std::move(ws.left());
    out.circuit_right = std::move(ws.right());

    StabilizerTableau result = apply_circuit(t, out.circuit_left);
    result = apply_circuit(result, out.circuit_right);
    auto expect = [&](PauliOperator p) {
        if (membership(result, p) != Membership::PlusMember) {
            throw Error(ErrorKind::Infeasible, "decomposition check failed for " + p.str());
        }
    };
    for (auto [a, b] : out.pairing) {
        expect(PauliOperator::single(n, a, 'X') * PauliOperator::single(n, b, 'X'));
        expect(PauliOperator::single(n, a, 'Z') * PauliOperator::single(n, b, 'Z'));
    }
    for (auto z : out.zeros) {
        expect(PauliOperator::single(n, z, 'Z'));
    }
    return out;
}

OutcomeDistribution apply_layout(const OutcomeDistribution &d, const std::vector<std::size_t> &layout,
                                 std::vector<Segment> target_layout) {
    OutcomeDistribution out(std::move(target_layout));
    for (const auto &[key, p] : d.entries()) {
        std::string k(layout.size(), '0');
        for (std::size_t i = 0; i < layout.size(); i++) {
            k[i] = key.at(layout[i]);
        }
        out.add(k, p);
    }
    return out;
}

Canonicalized canonicalize(const NetworkSpec &spec) {
    if (spec.has_mixed_source()) {
        throw Error(ErrorKind::MixedSourcePresent, "canonical form needs pure sources");
    }
    std::size_t k = validate(spec);
    if (k > 2) {
        throw Error(ErrorKind::NotTwoNetwork, "an edge reaches " + std::to_string(k) + " parties");
    }
    auto owner = spec.qubit_owner();

    NetworkSpec out;
    out.num_vertices = spec.num_qubits();
    std::vector<CliffordCircuit> prefix(spec.parties.size());
    const std::vector<std::string> bell_gens = {"+XX", "+ZZ"};
    const std::vector<std::string> zero_gens = {"+Z"};

    for (const auto &e : spec.edges) {
        const PureSource &src = e.source.components.at(0).state;
        std::size_t first = owner[e.vertices[0]];
        std::vector<std::size_t> left, right;
        for (std::size_t i = 0; i < e.vertices.size(); i++) {
            (owner[e.vertices[i]] == first ? left : right).push_back(i);
        }
        BipartiteDecomposition dec = decompose_bipartite(src, left, right);
        prefix[first].append(dec.circuit_left.inverse().remapped(e.vertices));
        if (!right.empty()) {
            prefix[owner[e.vertices[right[0]]]].append(dec.circuit_right.inverse().remapped(e.vertices));
        }
        bool single = dec.pairing.size() + dec.zeros.size() == 1;
        for (std::size_t i = 0; i < dec.pairing.size(); i++) {
            auto [a, b] = dec.pairing[i];
            std::size_t va = e.vertices[a], vb = e.vertices[b];
            if (single && e.vertices.size() == 2) {
                va = e.vertices[0];
                vb = e.vertices[1];
            }
            out.edges.push_back(Edge{single ? e.name : e.name + ".b" + std::to_string(i), {va, vb},
                                     Source::pure(PureSource::from_literals(bell_gens))});
        }
        for (std::size_t i = 0; i < dec.zeros.size(); i++) {
            out.edges.push_back(Edge{single ? e.name : e.name + ".z" + std::to_string(i), {e.vertices[dec.zeros[i]]},
                                     Source::pure(PureSource::from_literals(zero_gens))});
        }
    }

    for (std::size_t p = 0; p < spec.parties.size(); p++) {
        Party party = spec.parties[p];
        std::size_t off = spec.ancilla_offset(p);
        for (std::size_t a = 0; a < party.ancillas; a++) {
            out.edges.push_back(Edge{"anc." + party.name + "." + std::to_string(a), {off + a},
                                     Source::pure(PureSource::from_literals(zero_gens))});
            party.vertices.push_back(off + a);
        }
        party.ancillas = 0;
        std::sort(party.vertices.begin(), party.vertices.end());
        CliffordCircuit c = prefix[p];
        c.append(party.circuit);
        party.circuit = std::move(c);
        out.parties.push_back(std::move(party));
    }

    // Ancillas were already numbered after the vertices in party order, so
    // every party's outcome order is unchanged.
    std::vector<std::size_t> layout(spec.num_qubits());
    for (std::size_t i = 0; i < layout.size(); i++) {
        layout[i] = i;
    }
    bool any_post = std::any_of(spec.parties.begin(), spec.parties.end(), [](const Party &p) { return p.post; });
    if (any_post) {
        layout.resize(OutcomeDistribution(spec.outcome_layout()).key_length());
        for (std::size_t i = 0; i < layout.size(); i++) {
            layout[i] = i;
        }
    }
    return Canonicalized{std::move(out), std::move(layout)};
}

}  // namespace qnet::canonical
