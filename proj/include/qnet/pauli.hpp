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
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qnet/bitvec.hpp"

namespace qnet {

class CliffordCircuit;

/// Signed n-qubit Pauli operator i^phase * P_0 (x) ... (x) P_{n-1}, stored in
/// the symplectic (x, z) representation. The pattern (1, 1) is Y itself, not
/// XZ, so real-signed generators need no hidden factors of i.
class PauliOperator {
   public:
    PauliOperator() = default;
    /// Identity on n qubits.
    explicit PauliOperator(std::size_t n) : xs_(n), zs_(n) {
    }
    PauliOperator(BitVec xs, BitVec zs, std::uint8_t phase);

    /// Single-qubit operator ('I', 'X', 'Y' or 'Z') at `qubit`, identity elsewhere.
    static PauliOperator single(std::size_t n, std::size_t qubit, char pauli);

    /// Parses "+XZ", "-iYYI", "XX" (leading sign optional).
    static PauliOperator parse(std::string_view text);

    std::size_t size() const noexcept {
        return xs_.size();
    }
    /// Exponent of i, always in {0, 1, 2, 3}.
    std::uint8_t phase() const noexcept {
        return phase_;
    }
    bool is_real() const noexcept {
        return (phase_ & 1) == 0;
    }
    /// +1 or -1 for real operators.
    int sign() const noexcept {
        return phase_ == 0 ? 1 : -1;
    }
    const BitVec &xs() const noexcept {
        return xs_;
    }
    const BitVec &zs() const noexcept {
        return zs_;
    }
    bool x(std::size_t q) const noexcept {
        return xs_.get(q);
    }
    bool z(std::size_t q) const noexcept {
        return zs_.get(q);
    }
    char at(std::size_t q) const noexcept {
        return "IXZY"[x(q) + 2 * z(q)];
    }
    bool is_identity_up_to_phase() const noexcept {
        return !xs_.any() && !zs_.any();
    }
    /// Copy with phase 0.
    PauliOperator bare() const {
        return PauliOperator(xs_, zs_, 0);
    }
    PauliOperator negated() const {
        return PauliOperator(xs_, zs_, static_cast<std::uint8_t>((phase_ + 2) & 3));
    }
    void set_phase(std::uint8_t phase) noexcept {
        phase_ = phase & 3;
    }

    /// Bits laid out as (x_0..x_{n-1}, z_0..z_{n-1}).
    BitVec symplectic_bits() const {
        return xs_.concat(zs_);
    }
    /// Bits laid out as (z_0..z_{n-1}, x_0..x_{n-1}); dotting this with
    /// another operator's symplectic_bits() gives the commutation parity.
    BitVec swapped_bits() const {
        return zs_.concat(xs_);
    }

    /// Operator restricted to the listed qubits, in that order. Keeps phase.
    PauliOperator restricted(const std::vector<std::size_t> &qubits) const;
    /// Operator on `n` qubits with this operator's qubit i placed at positions[i].
    PauliOperator embedded(std::size_t n, const std::vector<std::size_t> &positions) const;
    /// this (x) tail.
    PauliOperator tensor(const PauliOperator &tail) const;

    std::string str() const;

    PauliOperator &operator*=(const PauliOperator &rhs);
    friend PauliOperator operator*(PauliOperator lhs, const PauliOperator &rhs) {
        lhs *= rhs;
        return lhs;
    }

    bool operator==(const PauliOperator &other) const = default;

    // Heisenberg updates p -> U p U^dagger, one gate at a time.
    void apply_h(std::size_t q);
    void apply_s(std::size_t q);
    void apply_x(std::size_t q);
    void apply_y(std::size_t q);
    void apply_z(std::size_t q);
    void apply_cx(std::size_t control, std::size_t target);
    void apply_cz(std::size_t a, std::size_t b);

   private:
    BitVec xs_;
    BitVec zs_;
    std::uint8_t phase_ = 0;
};

/// Group product with exact phase tracking.
PauliOperator multiply(const PauliOperator &p, const PauliOperator &q);

/// Symplectic form equals zero. Phases are ignored.
bool commutes(const PauliOperator &p, const PauliOperator &q);

/// U p U^dagger for the unitary U implemented by `circuit`.
PauliOperator conjugate(const PauliOperator &p, const CliffordCircuit &circuit);

struct PauliSupports {
    std::vector<std::size_t> x;
    std::vector<std::size_t> y;
    std::vector<std::size_t> z;
};

/// Qubits where the operator acts as X, Y and Z respectively.
PauliSupports supports(const PauliOperator &p);

}  // namespace qnet
