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

#include "qnet/circuit.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "qnet/error.hpp"

namespace qnet {

namespace {

const char *gate_name(GateKind k) {
    switch (k) {
        case GateKind::H:
            return "H";
        case GateKind::S:
            return "S";
        case GateKind::X:
            return "X";
        case GateKind::Y:
            return "Y";
        case GateKind::Z:
            return "Z";
        case GateKind::CX:
            return "CX";
        case GateKind::CZ:
            return "CZ";
    }
    return "?";
}

std::size_t parse_index(const std::string &tok, std::string_view whole) {
    if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](unsigned char c) { return std::isdigit(c); })) {
        throw ParseError(0, "bad qubit index in gate '" + std::string(whole) + "'");
    }
    return static_cast<std::size_t>(std::stoull(tok));
}

Gate parse_gate(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string name, a, b, extra;
    in >> name >> a;
    bool has_b = static_cast<bool>(in >> b);
    if (in >> extra) {
        throw ParseError(0, "trailing tokens in gate '" + std::string(text) + "'");
    }
    static const std::pair<const char *, GateKind> single[] = {
        {"H", GateKind::H}, {"S", GateKind::S}, {"X", GateKind::X}, {"Y", GateKind::Y}, {"Z", GateKind::Z}};
    for (auto [n, k] : single) {
        if (name == n) {
            if (has_b || a.empty()) {
                throw ParseError(0, "gate '" + std::string(text) + "' takes one qubit");
            }
            return Gate{k, parse_index(a, text)};
        }
    }
    if (name == "CX" || name == "CZ") {
        if (!has_b) {
            throw ParseError(0, "gate '" + std::string(text) + "' takes two qubits");
        }
        Gate g{name == "CX" ? GateKind::CX : GateKind::CZ, parse_index(a, text), parse_index(b, text)};
        if (g.a == g.b) {
            throw ParseError(0, "gate '" + std::string(text) + "' repeats a qubit");
        }
        return g;
    }
    throw ParseError(0, "unknown gate '" + std::string(text) + "'");
}

}  // namespace

std::string Gate::str() const {
    std::string s = gate_name(kind);
    s += " " + std::to_string(a);
    if (is_two_qubit()) {
        s += " " + std::to_string(b);
    }
    return s;
}

CliffordCircuit CliffordCircuit::parse(std::string_view text) {
    CliffordCircuit c;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find(';', start);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        std::string_view piece = text.substr(start, end - start);
        bool blank = std::all_of(piece.begin(), piece.end(), [](unsigned char ch) { return std::isspace(ch); });
        if (!blank) {
            c.gates_.push_back(parse_gate(piece));
        }
        start = end + 1;
    }
    return c;
}

CliffordCircuit &CliffordCircuit::h(std::size_t q) {
    return append(Gate{GateKind::H, q});
}
CliffordCircuit &CliffordCircuit::s(std::size_t q) {
    return append(Gate{GateKind::S, q});
}
CliffordCircuit &CliffordCircuit::x(std::size_t q) {
    return append(Gate{GateKind::X, q});
}
CliffordCircuit &CliffordCircuit::y(std::size_t q) {
    return append(Gate{GateKind::Y, q});
}
CliffordCircuit &CliffordCircuit::z(std::size_t q) {
    return append(Gate{GateKind::Z, q});
}
CliffordCircuit &CliffordCircuit::cx(std::size_t control, std::size_t target) {
    return append(Gate{GateKind::CX, control, target});
}
CliffordCircuit &CliffordCircuit::cz(std::size_t a, std::size_t b) {
    return append(Gate{GateKind::CZ, a, b});
}

CliffordCircuit &CliffordCircuit::append(const Gate &g) {
    gates_.push_back(g);
    return *this;
}

CliffordCircuit &CliffordCircuit::append(const CliffordCircuit &other) {
    gates_.insert(gates_.end(), other.gates_.begin(), other.gates_.end());
    return *this;
}

std::size_t CliffordCircuit::width() const noexcept {
    std::size_t w = 0;
    for (const Gate &g : gates_) {
        w = std::max(w, g.a + 1);
        if (g.is_two_qubit()) {
            w = std::max(w, g.b + 1);
        }
    }
    return w;
}

std::vector<std::size_t> CliffordCircuit::qubits() const {
    std::set<std::size_t> qs;
    for (const Gate &g : gates_) {
        qs.insert(g.a);
        if (g.is_two_qubit()) {
            qs.insert(g.b);
        }
    }
    return {qs.begin(), qs.end()};
}

CliffordCircuit CliffordCircuit::inverse() const {
    CliffordCircuit out;
    for (auto it = gates_.rbegin(); it != gates_.rend(); ++it) {
        if (it->kind == GateKind::S) {
            out.s(it->a).s(it->a).s(it->a);
        } else {
            out.append(*it);
        }
    }
    return out;
}

CliffordCircuit CliffordCircuit::remapped(const std::vector<std::size_t> &mapping) const {
    CliffordCircuit out;
    for (Gate g : gates_) {
        g.a = mapping.at(g.a);
        if (g.is_two_qubit()) {
            g.b = mapping.at(g.b);
        }
        out.append(g);
    }
    return out;
}

std::string CliffordCircuit::str() const {
    std::string s;
    for (std::size_t i = 0; i < gates_.size(); i++) {
        if (i) {
            s += ";";
        }
        s += gates_[i].str();
    }
    return s;
}

}  // namespace qnet
