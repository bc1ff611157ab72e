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

#include "qnet/pauli.hpp"

#include "qnet/circuit.hpp"
#include "qnet/error.hpp"

namespace qnet {

namespace {

void require_same_size(const PauliOperator &p, const PauliOperator &q) {
    if (p.size() != q.size()) {
        throw Error(ErrorKind::DimensionError,
                    "Pauli operators act on " + std::to_string(p.size()) + " and " + std::to_string(q.size()) +
                        " qubits");
    }
}

}  // namespace

PauliOperator::PauliOperator(BitVec xs, BitVec zs, std::uint8_t phase)
    : xs_(std::move(xs)), zs_(std::move(zs)), phase_(phase & 3) {
    if (xs_.size() != zs_.size()) {
        throw Error(ErrorKind::DimensionError, "x and z parts differ in length");
    }
}

PauliOperator PauliOperator::single(std::size_t n, std::size_t qubit, char pauli) {
    if (qubit >= n) {
        throw Error(ErrorKind::IndexOutOfRange, "qubit " + std::to_string(qubit) + " >= " + std::to_string(n));
    }
    PauliOperator p(n);
    switch (pauli) {
        case 'I':
            break;
        case 'X':
            p.xs_.set(qubit, true);
            break;
        case 'Y':
            p.xs_.set(qubit, true);
            p.zs_.set(qubit, true);
            break;
        case 'Z':
            p.zs_.set(qubit, true);
            break;
        default:
            throw Error(ErrorKind::DimensionError, std::string("unknown Pauli '") + pauli + "'");
    }
    return p;
}

PauliOperator PauliOperator::parse(std::string_view text) {
    std::uint8_t phase = 0;
    std::size_t i = 0;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
        phase = text[i] == '-' ? 2 : 0;
        i++;
        if (i < text.size() && text[i] == 'i') {
            phase = static_cast<std::uint8_t>(phase + 1);
            i++;
        }
    }
    std::string_view body = text.substr(i);
    if (body.empty()) {
        throw ParseError(0, "Pauli literal '" + std::string(text) + "' has no qubits");
    }
    PauliOperator p(body.size());
    p.phase_ = phase;
    for (std::size_t q = 0; q < body.size(); q++) {
        switch (body[q]) {
            case 'I':
            case '_':
                break;
            case 'X':
                p.xs_.set(q, true);
                break;
            case 'Y':
                p.xs_.set(q, true);
                p.zs_.set(q, true);
                break;
            case 'Z':
                p.zs_.set(q, true);
                break;
            default:
                throw ParseError(0, "bad Pauli literal '" + std::string(text) + "'");
        }
    }
    return p;
}

PauliOperator PauliOperator::restricted(const std::vector<std::size_t> &qubits) const {
    PauliOperator out(qubits.size());
    for (std::size_t i = 0; i < qubits.size(); i++) {
        out.xs_.set(i, x(qubits[i]));
        out.zs_.set(i, z(qubits[i]));
    }
    out.phase_ = phase_;
    return out;
}

PauliOperator PauliOperator::embedded(std::size_t n, const std::vector<std::size_t> &positions) const {
    PauliOperator out(n);
    for (std::size_t i = 0; i < positions.size(); i++) {
        out.xs_.set(positions[i], x(i));
        out.zs_.set(positions[i], z(i));
    }
    out.phase_ = phase_;
    return out;
}

PauliOperator PauliOperator::tensor(const PauliOperator &tail) const {
    return PauliOperator(xs_.concat(tail.xs_), zs_.concat(tail.zs_), static_cast<std::uint8_t>(phase_ + tail.phase_));
}

std::string PauliOperator::str() const {
    static const char *prefixes[] = {"+", "+i", "-", "-i"};
    std::string s = prefixes[phase_];
    for (std::size_t q = 0; q < size(); q++) {
        s.push_back(at(q));
    }
    return s;
}

PauliOperator &PauliOperator::operator*=(const PauliOperator &rhs) {
    require_same_size(*this, rhs);
    // Per-qubit phase contributions: XY, YZ, ZX give +i; YX, ZY, XZ give -i.
    int delta = 0;
    for (std::size_t w = 0; w < xs_.num_words(); w++) {
        std::uint64_t x1 = xs_.word(w), z1 = zs_.word(w);
        std::uint64_t x2 = rhs.xs_.word(w), z2 = rhs.zs_.word(w);
        std::uint64_t plus = (x1 & ~z1 & x2 & z2) | (x1 & z1 & ~x2 & z2) | (~x1 & z1 & x2 & ~z2);
        std::uint64_t minus = (x1 & ~z1 & ~x2 & z2) | (x1 & z1 & x2 & ~z2) | (~x1 & z1 & x2 & z2);
        delta += std::popcount(plus) - std::popcount(minus);
    }
    int total = static_cast<int>(phase_) + static_cast<int>(rhs.phase_) + delta;
    phase_ = static_cast<std::uint8_t>(((total % 4) + 4) % 4);
    xs_ ^= rhs.xs_;
    zs_ ^= rhs.zs_;
    return *this;
}

void PauliOperator::apply_h(std::size_t q) {
    bool xq = x(q), zq = z(q);
    if (xq && zq) {
        phase_ = (phase_ + 2) & 3;
    }
    xs_.set(q, zq);
    zs_.set(q, xq);
}

void PauliOperator::apply_s(std::size_t q) {
    bool xq = x(q), zq = z(q);
    // X -> Y, Y -> -X.
    if (xq && zq) {
        phase_ = (phase_ + 2) & 3;
    }
    zs_.set(q, zq ^ xq);
}

void PauliOperator::apply_x(std::size_t q) {
    if (z(q)) {
        phase_ = (phase_ + 2) & 3;
    }
}

void PauliOperator::apply_y(std::size_t q) {
    if (x(q) != z(q)) {
        phase_ = (phase_ + 2) & 3;
    }
}

void PauliOperator::apply_z(std::size_t q) {
    if (x(q)) {
        phase_ = (phase_ + 2) & 3;
    }
}

void PauliOperator::apply_cx(std::size_t control, std::size_t target) {
    bool xc = x(control), zc = z(control), xt = x(target), zt = z(target);
    if (xc && zt && (xt == zc)) {
        phase_ = (phase_ + 2) & 3;
    }
    xs_.set(target, xt ^ xc);
    zs_.set(control, zc ^ zt);
}

void PauliOperator::apply_cz(std::size_t a, std::size_t b) {
    apply_h(b);
    apply_cx(a, b);
    apply_h(b);
}

PauliOperator multiply(const PauliOperator &p, const PauliOperator &q) {
    return p * q;
}

bool commutes(const PauliOperator &p, const PauliOperator &q) {
    require_same_size(p, q);
    std::uint64_t acc = 0;
    for (std::size_t w = 0; w < p.xs().num_words(); w++) {
        acc ^= (p.xs().word(w) & q.zs().word(w)) ^ (p.zs().word(w) & q.xs().word(w));
    }
    return (std::popcount(acc) & 1) == 0;
}

PauliOperator conjugate(const PauliOperator &p, const CliffordCircuit &circuit) {
    PauliOperator out = p;
    for (const Gate &g : circuit.gates()) {
        if (g.a >= p.size() || (g.is_two_qubit() && g.b >= p.size())) {
            throw Error(ErrorKind::IndexOutOfRange,
                        "gate '" + g.str() + "' out of range for " + std::to_string(p.size()) + " qubits");
        }
        switch (g.kind) {
            case GateKind::H:
                out.apply_h(g.a);
                break;
            case GateKind::S:
                out.apply_s(g.a);
                break;
            case GateKind::X:
                out.apply_x(g.a);
                break;
            case GateKind::Y:
                out.apply_y(g.a);
                break;
            case GateKind::Z:
                out.apply_z(g.a);
                break;
            case GateKind::CX:
                out.apply_cx(g.a, g.b);
                break;
            case GateKind::CZ:
                out.apply_cz(g.a, g.b);
                break;
        }
    }
    return out;
}

PauliSupports supports(const PauliOperator &p) {
    PauliSupports s;
    for (std::size_t q = 0; q < p.size(); q++) {
        bool xq = p.x(q), zq = p.z(q);
        if (xq && zq) {
            s.y.push_back(q);
        } else if (xq) {
            s.x.push_back(q);
        } else if (zq) {
            s.z.push_back(q);
        }
    }
    return s;
}

}  // namespace qnet
