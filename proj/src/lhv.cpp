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

#include "qnet/lhv.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <map>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "qnet/error.hpp"
#include "qnet/gf2.hpp"

namespace qnet::lhv {

namespace {

bool is_bell_state(const StabilizerTableau &t) {
    return t.num_qubits() == 2 && membership(t, PauliOperator::parse("+XX")) == Membership::PlusMember &&
           membership(t, PauliOperator::parse("+ZZ")) == Membership::PlusMember;
}

bool is_zero_state(const StabilizerTableau &t) {
    return t.num_qubits() == 1 && membership(t, PauliOperator::parse("+Z")) == Membership::PlusMember;
}

std::vector<std::size_t> outcome_order(const NetworkSpec &spec) {
    std::vector<std::size_t> order;
    for (std::size_t p = 0; p < spec.parties.size(); p++) {
        for (auto q : spec.party_qubits(p)) {
            order.push_back(q);
        }
    }
    return order;
}

}  // namespace

CanonicalStructure canonical_structure(const NetworkSpec &spec) {
    if (spec.has_mixed_source()) {
        throw Error(ErrorKind::MixedSourcePresent, "local models exist only for pure stabilizer sources");
    }
    validate(spec);
    auto owner = spec.qubit_owner();
    CanonicalStructure out;
    for (const auto &e : spec.edges) {
        StabilizerTableau t = e.source.components.at(0).state.tableau();
        if (e.vertices.size() == 2 && is_bell_state(t)) {
            if (owner[e.vertices[0]] == owner[e.vertices[1]]) {
                throw Error(ErrorKind::NotCanonical, "Bell edge '" + e.name + "' has both ends at one party");
            }
            out.bell_pairs.emplace_back(e.vertices[0], e.vertices[1]);
            out.bell_names.push_back(e.name);
        } else if (e.vertices.size() == 1 && is_zero_state(t)) {
            out.degenerate.push_back(e.vertices[0]);
        } else {
            throw Error(ErrorKind::NotCanonical, "edge '" + e.name + "' is neither a Bell pair nor a |0> vertex");
        }
    }
    for (std::size_t q = spec.num_vertices; q < spec.num_qubits(); q++) {
        out.degenerate.push_back(q);
    }
    return out;
}

StabilizerTableau network_state(const NetworkSpec &spec, const CanonicalStructure &structure) {
    StabilizerTableau bell = state_from_generators({"+XX", "+ZZ"});
    StabilizerTableau zero = zero_state(1);
    std::vector<const StabilizerTableau *> parts;
    std::vector<std::vector<std::size_t>> positions;
    for (auto [a, b] : structure.bell_pairs) {
        parts.push_back(&bell);
        positions.push_back({a, b});
    }
    for (auto q : structure.degenerate) {
        parts.push_back(&zero);
        positions.push_back({q});
    }
    return embed_tableaus(spec.num_qubits(), parts, positions);
}

std::vector<PauliOperator> conjugated_observables(const NetworkSpec &spec) {
    canonical_structure(spec);
    std::size_t n = spec.num_qubits();
    CliffordCircuit heisenberg = spec.global_circuit().inverse();
    auto owner = spec.qubit_owner();
    std::vector<PauliOperator> gs;
    gs.reserve(n);
    for (std::size_t k = 0; k < n; k++) {
        PauliOperator g = conjugate(PauliOperator::single(n, k, 'Z'), heisenberg);
        for (std::size_t q = 0; q < n; q++) {
            if ((g.x(q) || g.z(q)) && owner[q] != owner[k]) {
                throw Error(ErrorKind::Infeasible, "observable for qubit " + std::to_string(k) + " leaves its party");
            }
        }
        gs.push_back(std::move(g));
    }
    return gs;
}

std::vector<BitVec> stabilized_subsets(const std::vector<PauliOperator> &gs, const StabilizerTableau &stab) {
    // The stabilizer row space is Lagrangian, so bare(g_S) lies in it exactly
    // when g_S commutes with every generator.
    std::size_t n = stab.num_qubits();
    gf2::Matrix rows;
    for (const auto &g : gs) {
        BitVec r(n);
        for (std::size_t j = 0; j < n; j++) {
            r.set(j, !commutes(g, stab.stabilizers()[j]));
        }
        rows.push_back(std::move(r));
    }
    return gf2::left_kernel(rows, n);
}

PauliOperator subset_product(const std::vector<PauliOperator> &gs, const BitVec &subset) {
    PauliOperator prod(gs.empty() ? 0 : gs[0].size());
    for (std::size_t k = 0; k < gs.size(); k++) {
        if (subset.get(k)) {
            prod *= gs[k];
        }
    }
    return prod;
}

PauliOperator sign_fixing_pauli(const std::vector<PauliOperator> &gs, const StabilizerTableau &stab) {
    std::size_t n = stab.num_qubits();
    auto basis = stabilized_subsets(gs, stab);
    gf2::Matrix rows;
    BitVec rhs(basis.size());
    for (std::size_t i = 0; i < basis.size(); i++) {
        PauliOperator g = subset_product(gs, basis[i]);
        Membership m = membership(stab, g);
        if (m == Membership::NonMember) {
            throw Error(ErrorKind::Infeasible, "subset product " + g.str() + " is not stabilized");
        }
        rows.push_back(g.swapped_bits());
        rhs.set(i, m == Membership::MinusMember);
    }
    auto sol = gf2::solve_lexmin(rows, rhs, 2 * n);
    if (!sol) {
        throw Error(ErrorKind::Infeasible, "no Pauli realizes the required commutation pattern");
    }
    return PauliOperator(sol->slice(0, n), sol->slice(n, n), 0);
}

LocalModel synthesize(const NetworkSpec &spec) {
    CanonicalStructure structure = canonical_structure(spec);
    auto gs = conjugated_observables(spec);
    StabilizerTableau stab = network_state(spec, structure);
    auto owner = spec.qubit_owner();

    LocalModel model;
    model.g0 = sign_fixing_pauli(gs, stab);
    for (std::size_t p = 0; p < spec.parties.size(); p++) {
        model.layout.push_back(Segment{spec.parties[p].name, spec.parties[p].vertices.size() + spec.parties[p].ancillas});
    }
    std::vector<std::vector<std::size_t>> slots_of_qubit(spec.num_qubits());
    for (std::size_t i = 0; i < structure.bell_pairs.size(); i++) {
        auto [a, b] = structure.bell_pairs[i];
        std::size_t id = model.slots.size();
        model.slots.push_back(HiddenSlot{"e" + std::to_string(i), false, {a, b}, {owner[a], owner[b]}});
        slots_of_qubit[a].push_back(id);
        slots_of_qubit[b].push_back(id);
    }
    for (std::size_t i = 0; i < structure.degenerate.size(); i++) {
        std::size_t q = structure.degenerate[i];
        std::size_t id = model.slots.size();
        model.slots.push_back(HiddenSlot{"a" + std::to_string(i), true, {q}, {owner[q]}});
        slots_of_qubit[q].push_back(id);
    }

    for (auto k : outcome_order(spec)) {
        const PauliOperator &g = gs[k];
        ResponseFunction r;
        r.qubit = k;
        r.party = owner[k];
        r.constant = !commutes(g, model.g0);
        // Coefficient of each slot bit is |e cap phi_axis(g_k)| mod 2.
        std::map<std::pair<std::size_t, char>, bool> coeff;
        PauliSupports sup = supports(g);
        auto count = [&](const std::vector<std::size_t> &qs, char axis) {
            for (auto q : qs) {
                for (auto slot : slots_of_qubit[q]) {
                    if (axis == 'Z' && model.slots[slot].degenerate) {
                        continue;
                    }
                    coeff[{slot, axis}] ^= true;
                }
            }
        };
        count(sup.x, 'X');
        count(sup.y, 'Y');
        count(sup.z, 'Z');
        for (const auto &[key, on] : coeff) {
            if (on) {
                r.terms.push_back(Term{key.first, key.second});
            }
        }
        model.outputs.push_back(std::move(r));
    }
    if (!respects_locality(model)) {
        throw Error(ErrorKind::Infeasible, "synthesized response reads a non-incident slot");
    }
    return model;
}

bool respects_locality(const LocalModel &model) {
    for (const auto &r : model.outputs) {
        for (const auto &t : r.terms) {
            const auto &parties = model.slots.at(t.slot).parties;
            if (std::find(parties.begin(), parties.end(), r.party) == parties.end()) {
                return false;
            }
        }
    }
    return true;
}

namespace {

/// Variable index per (slot, axis) under a variant; Y maps to {X, Z} for TwoBit.
struct VariableMap {
    std::size_t count = 0;
    std::vector<std::array<std::vector<std::size_t>, 3>> of_slot;  // axis order X, Y, Z
};

std::size_t axis_index(char axis) {
    return axis == 'X' ? 0 : axis == 'Y' ? 1 : 2;
}

VariableMap variables_for(const LocalModel &model, Variant variant) {
    VariableMap vm;
    vm.of_slot.resize(model.slots.size());
    for (std::size_t s = 0; s < model.slots.size(); s++) {
        auto &m = vm.of_slot[s];
        bool deg = model.slots[s].degenerate;
        if (variant == Variant::Trio) {
            m[0] = {vm.count++};
            m[1] = {vm.count++};
            if (!deg) {
                m[2] = {vm.count++};
            }
        } else {
            std::size_t xv = vm.count++;
            m[0] = {xv};
            if (deg) {
                m[1] = {xv};
            } else {
                std::size_t zv = vm.count++;
                m[2] = {zv};
                m[1] = {xv, zv};
            }
        }
    }
    return vm;
}

}  // namespace

std::uint64_t assignment_count(const LocalModel &model, Variant variant) {
    std::size_t v = variables_for(model, variant).count;
    if (v >= 64) {
        return UINT64_MAX;
    }
    return std::uint64_t{1} << v;
}

OutcomeDistribution evaluate(const LocalModel &model, Variant variant, std::uint64_t bound) {
    VariableMap vm = variables_for(model, variant);
    if (vm.count >= 63 || (std::uint64_t{1} << vm.count) > bound) {
        throw Error(ErrorKind::EnumerationTooLarge,
                    "2^" + std::to_string(vm.count) + " assignments exceed the bound " + std::to_string(bound));
    }
    std::size_t n_out = model.outputs.size();

    // Column of each variable: the set of outputs it flips.
    std::vector<BitVec> columns(vm.count, BitVec(n_out));
    BitVec constant(n_out);
    for (std::size_t o = 0; o < n_out; o++) {
        const auto &r = model.outputs[o];
        constant.set(o, r.constant);
        for (const auto &t : r.terms) {
            for (auto v : vm.of_slot.at(t.slot)[axis_index(t.axis)]) {
                columns[v].flip(o);
            }
        }
    }
    // Variables that flip nothing only scale every count by two.
    std::vector<BitVec> active;
    for (auto &c : columns) {
        if (c.any()) {
            active.push_back(std::move(c));
        }
    }
    std::size_t d = active.size();
    Rational weight = dyadic(d);

    OutcomeDistribution out(model.layout);
    if (out.key_length() != n_out) {
        throw Error(ErrorKind::ShapeMismatch, "model layout does not match its outputs");
    }
    auto key_of = [&](std::uint64_t bits) {
        std::string key(n_out, '0');
        for (std::size_t o = 0; o < n_out; o++) {
            if ((bits >> o) & 1) {
                key[o] = '1';
            }
        }
        return key;
    };

    if (n_out <= 64) {
        std::uint64_t state = n_out ? constant.word(0) : 0;
        std::vector<std::uint64_t> cols;
        for (const auto &c : active) {
            cols.push_back(c.word(0));
        }
        std::uint64_t total = std::uint64_t{1} << d;
        if (n_out <= 22) {
            std::vector<std::uint64_t> counts(std::size_t{1} << n_out, 0);
            counts[state]++;
            for (std::uint64_t k = 1; k < total; k++) {
                state ^= cols[static_cast<std::size_t>(std::countr_zero(k))];
                counts[state]++;
            }
            for (std::size_t b = 0; b < counts.size(); b++) {
                if (counts[b]) {
                    out.add(key_of(b), weight * counts[b]);
                }
            }
        } else {
            std::unordered_map<std::uint64_t, std::uint64_t> counts;
            counts[state]++;
            for (std::uint64_t k = 1; k < total; k++) {
                state ^= cols[static_cast<std::size_t>(std::countr_zero(k))];
                counts[state]++;
            }
            for (const auto &[b, c] : counts) {
                out.add(key_of(b), weight * c);
            }
        }
        return out;
    }

    std::map<BitVec, std::uint64_t> counts;
    BitVec state = constant;
    counts[state]++;
    std::uint64_t total = std::uint64_t{1} << d;
    for (std::uint64_t k = 1; k < total; k++) {
        state ^= active[static_cast<std::size_t>(std::countr_zero(k))];
        counts[state]++;
    }
    for (const auto &[b, c] : counts) {
        out.add(b.str(), weight * c);
    }
    return out;
}

OutcomeDistribution evaluate_for(const NetworkSpec &spec, const LocalModel &model, Variant variant,
                                 std::uint64_t bound) {
    OutcomeDistribution raw = evaluate(model, variant, bound);
    bool any_post = std::any_of(spec.parties.begin(), spec.parties.end(), [](const Party &p) { return p.post; });
    return any_post ? apply_post_tables(spec, raw) : raw;
}

namespace {

template <typename T>
void walsh_hadamard(std::vector<T> &v) {
    for (std::size_t h = 1; h < v.size(); h <<= 1) {
        for (std::size_t i = 0; i < v.size(); i += h << 1) {
            for (std::size_t j = i; j < i + h; j++) {
                T a = v[j];
                T b = v[j + h];
                v[j] = a + b;
                v[j + h] = a - b;
            }
        }
    }
}

/// Correlators sum_b N(b) (-1)^{b.S} over integer numerators N = p * denom.
struct Correlators {
    BigInt denom;
    std::vector<BigInt> values;
};

Correlators correlators(const OutcomeDistribution &d, std::size_t bound) {
    std::size_t n = d.key_length();
    if (n > bound) {
        throw Error(ErrorKind::TooLong,
                    "outcome length " + std::to_string(n) + " exceeds the spectrum bound " + std::to_string(bound));
    }
    if (!d.binary()) {
        throw Error(ErrorKind::ShapeMismatch, "parity spectra need bit-valued outcomes");
    }
    BigInt denom = 1;
    for (const auto &[k, p] : d.entries()) {
        denom = boost::multiprecision::lcm(denom, denominator(p));
    }
    auto index_of = [n](const std::string &key) {
        std::size_t idx = 0;
        for (std::size_t i = 0; i < n; i++) {
            if (key[i] == '1') {
                idx |= std::size_t{1} << i;
            }
        }
        return idx;
    };
    std::size_t size = std::size_t{1} << n;
    Correlators out{denom, {}};
    if (denom < (BigInt(1) << 62)) {
        std::vector<std::int64_t> v(size, 0);
        for (const auto &[k, p] : d.entries()) {
            v[index_of(k)] = static_cast<std::int64_t>(numerator(p) * (denom / denominator(p)));
        }
        walsh_hadamard(v);
        out.values.assign(v.begin(), v.end());
    } else {
        out.values.assign(size, BigInt(0));
        for (const auto &[k, p] : d.entries()) {
            out.values[index_of(k)] = numerator(p) * (denom / denominator(p));
        }
        walsh_hadamard(out.values);
    }
    return out;
}

}  // namespace

std::vector<Rational> parity_spectrum(const OutcomeDistribution &d, std::size_t bound) {
    Correlators c = correlators(d, bound);
    std::vector<Rational> out;
    out.reserve(c.values.size());
    for (const auto &w : c.values) {
        out.emplace_back(c.denom + w, 2 * c.denom);
    }
    return out;
}

bool equal_distributions(const OutcomeDistribution &a, const OutcomeDistribution &b, std::size_t bound) {
    if (a.key_length() != b.key_length()) {
        throw Error(ErrorKind::ShapeMismatch, "outcome lengths " + std::to_string(a.key_length()) + " and " +
                                                  std::to_string(b.key_length()) + " differ");
    }
    Correlators ca = correlators(a, bound);
    Correlators cb = correlators(b, bound);
    for (std::size_t s = 0; s < ca.values.size(); s++) {
        if ((ca.denom + ca.values[s]) * cb.denom != (cb.denom + cb.values[s]) * ca.denom) {
            return false;
        }
    }
    return true;
}

bool equal_direct(const OutcomeDistribution &a, const OutcomeDistribution &b) {
    if (a.key_length() != b.key_length()) {
        throw Error(ErrorKind::ShapeMismatch, "outcome lengths " + std::to_string(a.key_length()) + " and " +
                                                  std::to_string(b.key_length()) + " differ");
    }
    return a.entries() == b.entries();
}

std::string LocalModel::serialize() const {
    std::ostringstream out;
    for (const auto &s : layout) {
        out << "party " << s.party << " width=" << s.width << "\n";
    }
    auto join = [](const std::vector<std::size_t> &v) {
        std::string s;
        for (std::size_t i = 0; i < v.size(); i++) {
            s += (i ? "," : "") + std::to_string(v[i]);
        }
        return s;
    };
    auto party_names = [&](const std::vector<std::size_t> &ps) {
        std::string s;
        for (std::size_t i = 0; i < ps.size(); i++) {
            s += (i ? "," : "") + layout.at(ps[i]).party;
        }
        return s;
    };
    for (const auto &s : slots) {
        out << (s.degenerate ? "degenerate " : "edge ") << s.name << " qubits=" << join(s.qubits)
            << " parties=" << party_names(s.parties) << "\n";
    }
    out << "g0 " << g0.str() << "\n";
    for (const auto &r : outputs) {
        out << "out " << r.qubit << " party=" << layout.at(r.party).party << " const=" << (r.constant ? 1 : 0)
            << " terms=";
        for (const auto &t : r.terms) {
            out << " " << slots.at(t.slot).name << "." << t.axis;
        }
        out << "\n";
    }
    return out.str();
}

LocalModel LocalModel::parse(std::string_view text) {
    LocalModel m;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t number = 0;
    auto value_of = [&](const std::string &tok, const std::string &key) {
        if (tok.rfind(key + "=", 0) != 0) {
            throw ParseError(number, "expected '" + key + "=', got '" + tok + "'");
        }
        return tok.substr(key.size() + 1);
    };
    auto split = [](const std::string &s) {
        std::vector<std::string> parts;
        std::size_t start = 0;
        while (!s.empty()) {
            auto comma = s.find(',', start);
            parts.push_back(s.substr(start, comma - start));
            if (comma == std::string::npos) {
                break;
            }
            start = comma + 1;
        }
        return parts;
    };
    auto party_index = [&](const std::string &name) {
        for (std::size_t p = 0; p < m.layout.size(); p++) {
            if (m.layout[p].party == name) {
                return p;
            }
        }
        throw ParseError(number, "unknown party '" + name + "'");
    };
    auto to_index = [&](const std::string &s) {
        try {
            return static_cast<std::size_t>(std::stoull(s));
        } catch (const std::exception &) {
            throw ParseError(number, "bad index '" + s + "'");
        }
    };
    while (std::getline(in, line)) {
        number++;
        std::istringstream ls(line);
        std::vector<std::string> toks;
        for (std::string t; ls >> t;) {
            toks.push_back(t);
        }
        if (toks.empty()) {
            continue;
        }
        if (toks[0] == "party" && toks.size() == 3) {
            m.layout.push_back(Segment{toks[1], to_index(value_of(toks[2], "width"))});
        } else if ((toks[0] == "edge" || toks[0] == "degenerate") && toks.size() == 4) {
            HiddenSlot s;
            s.name = toks[1];
            s.degenerate = toks[0] == "degenerate";
            for (const auto &q : split(value_of(toks[2], "qubits"))) {
                s.qubits.push_back(to_index(q));
            }
            for (const auto &p : split(value_of(toks[3], "parties"))) {
                s.parties.push_back(party_index(p));
            }
            m.slots.push_back(std::move(s));
        } else if (toks[0] == "g0" && toks.size() == 2) {
            m.g0 = PauliOperator::parse(toks[1]);
        } else if (toks[0] == "out" && toks.size() >= 5) {
            ResponseFunction r;
            r.qubit = to_index(toks[1]);
            r.party = party_index(value_of(toks[2], "party"));
            std::string c = value_of(toks[3], "const");
            if (c != "0" && c != "1") {
                throw ParseError(number, "const must be 0 or 1");
            }
            r.constant = c == "1";
            if (toks[4] != "terms=") {
                throw ParseError(number, "expected 'terms='");
            }
            for (std::size_t i = 5; i < toks.size(); i++) {
                auto dot = toks[i].rfind('.');
                if (dot == std::string::npos || dot + 2 != toks[i].size()) {
                    throw ParseError(number, "bad term '" + toks[i] + "'");
                }
                std::string name = toks[i].substr(0, dot);
                char axis = toks[i][dot + 1];
                auto it = std::find_if(m.slots.begin(), m.slots.end(),
                                       [&](const HiddenSlot &s) { return s.name == name; });
                if (it == m.slots.end() || (axis != 'X' && axis != 'Y' && axis != 'Z')) {
                    throw ParseError(number, "bad term '" + toks[i] + "'");
                }
                r.terms.push_back(Term{static_cast<std::size_t>(it - m.slots.begin()), axis});
            }
            m.outputs.push_back(std::move(r));
        } else {
            throw ParseError(number, "unrecognized model line");
        }
    }
    return m;
}

}  // namespace qnet::lhv
