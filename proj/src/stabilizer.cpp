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

#include "qnet/stabilizer.hpp"

#include <sstream>

#include "qnet/error.hpp"
#include "qnet/gf2.hpp"

namespace qnet {

const char *membership_name(Membership m) {
    switch (m) {
        case Membership::PlusMember:
            return "PlusMember";
        case Membership::MinusMember:
            return "MinusMember";
        case Membership::NonMember:
            return "NonMember";
    }
    return "?";
}

StabilizerTableau StabilizerTableau::from_generators(const std::vector<PauliOperator> &gens) {
    std::size_t n = gens.size();
    for (const auto &g : gens) {
        if (g.size() != gens.front().size()) {
            throw Error(ErrorKind::DimensionError, "generators " + gens.front().str() + " and " + g.str() +
                                                       " act on different numbers of qubits");
        }
    }
    for (const auto &g : gens) {
        if (g.size() != n) {
            throw Error(ErrorKind::WrongCount, std::to_string(n) + " generators given for a " +
                                                   std::to_string(g.size()) + "-qubit operator " + g.str());
        }
        if (!g.is_real()) {
            throw Error(ErrorKind::ImaginarySign, "generator " + g.str() + " has an imaginary sign");
        }
    }
    for (std::size_t i = 0; i < n; i++) {
        for (std::size_t j = i + 1; j < n; j++) {
            if (!commutes(gens[i], gens[j])) {
                throw Error(ErrorKind::NonCommuting, gens[i].str() + " anticommutes with " + gens[j].str());
            }
        }
    }
    gf2::Matrix rows;
    for (const auto &g : gens) {
        rows.push_back(g.symplectic_bits());
    }
    if (gf2::rank(rows) < n) {
        throw Error(ErrorKind::Dependent, "generators are not independent");
    }

    // Destabilizer d_i solves <d_i, s_j> = delta_ij; the swapped layout turns
    // the symplectic form into a plain dot product.
    gf2::Matrix swapped;
    for (const auto &g : gens) {
        swapped.push_back(g.swapped_bits());
    }
    std::vector<PauliOperator> destab;
    for (std::size_t i = 0; i < n; i++) {
        BitVec rhs(n);
        rhs.set(i, true);
        auto sol = gf2::solve_lexmin(swapped, rhs, 2 * n);
        if (!sol) {
            throw Error(ErrorKind::Infeasible, "no destabilizer for generator " + gens[i].str());
        }
        destab.emplace_back(sol->slice(0, n), sol->slice(n, n), 0);
    }
    for (std::size_t j = 0; j < n; j++) {
        for (std::size_t i = 0; i < j; i++) {
            if (!commutes(destab[i], destab[j])) {
                destab[j] = destab[j] * gens[i];
            }
        }
        destab[j].set_phase(0);
    }

    StabilizerTableau t;
    t.stabilizers_ = gens;
    t.destabilizers_ = std::move(destab);
    return t;
}

std::string StabilizerTableau::dump() const {
    std::ostringstream out;
    for (const auto &s : stabilizers_) {
        out << s.str() << "\n";
    }
    for (const auto &d : destabilizers_) {
        out << d.str() << "\n";
    }
    return out.str();
}

StabilizerTableau state_from_generators(const std::vector<std::string> &literals) {
    std::vector<PauliOperator> gens;
    gens.reserve(literals.size());
    for (const auto &lit : literals) {
        gens.push_back(PauliOperator::parse(lit));
    }
    return StabilizerTableau::from_generators(gens);
}

StabilizerTableau zero_state(std::size_t n) {
    StabilizerTableau t;
    for (std::size_t q = 0; q < n; q++) {
        t.stabilizers_.push_back(PauliOperator::single(n, q, 'Z'));
        t.destabilizers_.push_back(PauliOperator::single(n, q, 'X'));
    }
    return t;
}

StabilizerTableau apply_circuit(const StabilizerTableau &t, const CliffordCircuit &c) {
    if (c.width() > t.num_qubits()) {
        throw Error(ErrorKind::IndexOutOfRange, "circuit of width " + std::to_string(c.width()) + " on " +
                                                    std::to_string(t.num_qubits()) + " qubits");
    }
    StabilizerTableau out;
    out.stabilizers_.reserve(t.num_qubits());
    out.destabilizers_.reserve(t.num_qubits());
    for (const auto &s : t.stabilizers_) {
        out.stabilizers_.push_back(conjugate(s, c));
    }
    for (const auto &d : t.destabilizers_) {
        out.destabilizers_.push_back(conjugate(d, c));
    }
    return out;
}

StabilizerTableau tensor(const StabilizerTableau &a, const StabilizerTableau &b) {
    StabilizerTableau out;
    PauliOperator id_a(a.num_qubits());
    PauliOperator id_b(b.num_qubits());
    for (const auto &s : a.stabilizers_) {
        out.stabilizers_.push_back(s.tensor(id_b));
    }
    for (const auto &s : b.stabilizers_) {
        out.stabilizers_.push_back(id_a.tensor(s));
    }
    for (const auto &d : a.destabilizers_) {
        out.destabilizers_.push_back(d.tensor(id_b));
    }
    for (const auto &d : b.destabilizers_) {
        out.destabilizers_.push_back(id_a.tensor(d));
    }
    return out;
}

StabilizerTableau embed_tableaus(std::size_t n, const std::vector<const StabilizerTableau *> &parts,
                                 const std::vector<std::vector<std::size_t>> &positions) {
    StabilizerTableau out;
    out.stabilizers_.reserve(n);
    out.destabilizers_.reserve(n);
    for (std::size_t i = 0; i < parts.size(); i++) {
        for (const auto &s : parts[i]->stabilizers_) {
            out.stabilizers_.push_back(s.embedded(n, positions[i]));
        }
        for (const auto &d : parts[i]->destabilizers_) {
            out.destabilizers_.push_back(d.embedded(n, positions[i]));
        }
    }
    if (out.stabilizers_.size() != n) {
        throw Error(ErrorKind::WrongCount, "embedded parts cover " + std::to_string(out.stabilizers_.size()) +
                                               " of " + std::to_string(n) + " qubits");
    }
    return out;
}

Membership membership(const StabilizerTableau &t, const PauliOperator &p) {
    if (p.size() != t.num_qubits()) {
        throw Error(ErrorKind::DimensionError, "operator " + p.str() + " on a " + std::to_string(t.num_qubits()) +
                                                   "-qubit tableau");
    }
    if (!p.is_real()) {
        throw Error(ErrorKind::ImaginarySign, "membership query " + p.str() + " has an imaginary sign");
    }
    // If p is in the group, its expansion coefficient on s_i is <p, d_i>.
    PauliOperator product(p.size());
    const auto &stabs = t.stabilizers();
    const auto &destabs = t.destabilizers();
    for (std::size_t i = 0; i < stabs.size(); i++) {
        if (!commutes(p, destabs[i])) {
            product *= stabs[i];
        }
    }
    if (product.xs() != p.xs() || product.zs() != p.zs()) {
        return Membership::NonMember;
    }
    return product.phase() == p.phase() ? Membership::PlusMember : Membership::MinusMember;
}

void AffineSubspace::for_each_point(const std::function<void(const BitVec &)> &visit) const {
    BitVec point = offset;
    visit(point);
    std::size_t d = basis.size();
    if (d == 0) {
        return;
    }
    if (d >= 63) {
        throw Error(ErrorKind::EnumerationTooLarge, "affine subspace of dimension " + std::to_string(d));
    }
    std::uint64_t count = std::uint64_t{1} << d;
    for (std::uint64_t k = 1; k < count; k++) {
        point ^= basis[static_cast<std::size_t>(std::countr_zero(k))];
        visit(point);
    }
}

AffineSubspace z_support(const StabilizerTableau &t) {
    std::size_t n = t.num_qubits();
    // Row-reduce on the x part while carrying signs through exact products;
    // rows left with no x part generate the Z-type subgroup.
    std::vector<PauliOperator> rows = t.stabilizers();
    std::size_t r = 0;
    for (std::size_t q = 0; q < n && r < rows.size(); q++) {
        std::size_t pivot = r;
        while (pivot < rows.size() && !rows[pivot].x(q)) {
            pivot++;
        }
        if (pivot == rows.size()) {
            continue;
        }
        std::swap(rows[r], rows[pivot]);
        for (std::size_t i = 0; i < rows.size(); i++) {
            if (i != r && rows[i].x(q)) {
                rows[i] *= rows[r];
            }
        }
        r++;
    }
    gf2::Matrix constraints;
    BitVec parities(rows.size() - r);
    for (std::size_t i = r; i < rows.size(); i++) {
        constraints.push_back(rows[i].zs());
        parities.set(i - r, rows[i].phase() == 2);
    }

    AffineSubspace out;
    out.num_bits = n;
    if (constraints.empty()) {
        out.offset = BitVec(n);
    } else {
        auto sol = gf2::solve_lexmin(constraints, parities, n);
        if (!sol) {
            throw Error(ErrorKind::Infeasible, "inconsistent Z-type stabilizer constraints");
        }
        out.offset = *sol;
    }
    out.basis = gf2::right_kernel(constraints, n);
    return out;
}

}  // namespace qnet
