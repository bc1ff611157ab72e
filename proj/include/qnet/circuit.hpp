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
#include <string>
#include <string_view>
#include <vector>

namespace qnet {

enum class GateKind { H, S, X, Y, Z, CX, CZ };

struct Gate {
    GateKind kind;
    std::size_t a;
    std::size_t b = 0;  // only meaningful for CX (control a, target b) and CZ

    bool is_two_qubit() const noexcept {
        return kind == GateKind::CX || kind == GateKind::CZ;
    }
    std::string str() const;
    bool operator==(const Gate &) const = default;
};

/// Ordered gate list over {H, S, X, Y, Z, CX, CZ}. Gates apply first to last.
class CliffordCircuit {
   public:
    CliffordCircuit() = default;
    explicit CliffordCircuit(std::vector<Gate> gates) : gates_(std::move(gates)) {
    }

    /// "H 0; CX 0 1; S 2". Empty text gives the empty circuit.
    static CliffordCircuit parse(std::string_view text);

    const std::vector<Gate> &gates() const noexcept {
        return gates_;
    }
    bool empty() const noexcept {
        return gates_.empty();
    }
    std::size_t size() const noexcept {
        return gates_.size();
    }

    CliffordCircuit &h(std::size_t q);
    CliffordCircuit &s(std::size_t q);
    CliffordCircuit &x(std::size_t q);
    CliffordCircuit &y(std::size_t q);
    CliffordCircuit &z(std::size_t q);
    CliffordCircuit &cx(std::size_t control, std::size_t target);
    CliffordCircuit &cz(std::size_t a, std::size_t b);
    CliffordCircuit &append(const Gate &g);
    CliffordCircuit &append(const CliffordCircuit &other);

    /// One past the largest qubit index used (0 for the empty circuit).
    std::size_t width() const noexcept;
    /// Every qubit index the circuit touches.
    std::vector<std::size_t> qubits() const;

    /// Circuit for U^dagger. S^dagger is emitted as three S gates.
    CliffordCircuit inverse() const;
    /// Same gates with each index q replaced by mapping[q].
    CliffordCircuit remapped(const std::vector<std::size_t> &mapping) const;

    /// "H 0;CX 0 1"; the inverse of parse().
    std::string str() const;

    bool operator==(const CliffordCircuit &) const = default;

   private:
    std::vector<Gate> gates_;
};

}  // namespace qnet
