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
#include <functional>
#include <string>
#include <vector>

#include "qnet/bitvec.hpp"
#include "qnet/circuit.hpp"
#include "qnet/pauli.hpp"

namespace qnet {

enum class Membership { PlusMember, MinusMember, NonMember };

const char *membership_name(Membership m);

/// Stabilizer state on n qubits: n commuting, independent, real-signed
/// generators plus n destabilizers with <d_i, s_j> = delta_ij.
class StabilizerTableau {
   public:
    /// Validates commutation, independence and sign, and completes the
    /// destabilizers.
    static StabilizerTableau from_generators(const std::vector<PauliOperator> &gens);

    std::size_t num_qubits() const noexcept {
        return stabilizers_.size();
    }
    const std::vector<PauliOperator> &stabilizers() const noexcept {
        return stabilizers_;
    }
    const std::vector<PauliOperator> &destabilizers() const noexcept {
        return destabilizers_;
    }

    /// One signed literal per line, generators first then destabilizers.
    std::string dump() const;

   private:
    friend StabilizerTableau zero_state(std::size_t n);
    friend StabilizerTableau apply_circuit(const StabilizerTableau &t, const CliffordCircuit &c);
    friend StabilizerTableau tensor(const StabilizerTableau &a, const StabilizerTableau &b);
    friend StabilizerTableau embed_tableaus(std::size_t n, const std::vector<const StabilizerTableau *> &parts,
                                            const std::vector<std::vector<std::size_t>> &positions);

    std::vector<PauliOperator> stabilizers_;
    std::vector<PauliOperator> destabilizers_;
};

/// Parses each literal and builds the tableau. Throws WrongCount when the
/// number of literals differs from their width.
StabilizerTableau state_from_generators(const std::vector<std::string> &literals);

StabilizerTableau zero_state(std::size_t n);

StabilizerTableau apply_circuit(const StabilizerTableau &t, const CliffordCircuit &c);

/// a (x) b, with a's qubits first.
StabilizerTableau tensor(const StabilizerTableau &a, const StabilizerTableau &b);

/// Places each part on its listed qubits of an n-qubit register. The position
/// lists must be disjoint and cover 0..n-1; nothing is re-validated.
StabilizerTableau embed_tableaus(std::size_t n, const std::vector<const StabilizerTableau *> &parts,
                                 const std::vector<std::vector<std::size_t>> &positions);

/// Whether +p, -p or neither lies in the stabilizer group.
Membership membership(const StabilizerTableau &t, const PauliOperator &p);

/// Solution set {b : A b = c} of the parity constraints a Z-basis measurement
/// must satisfy. Every point is equally likely.
struct AffineSubspace {
    std::size_t num_bits = 0;
    BitVec offset;
    std::vector<BitVec> basis;

    std::size_t dimension() const noexcept {
        return basis.size();
    }
    /// Calls `visit` once per point, in Gray-code order.
    void for_each_point(const std::function<void(const BitVec &)> &visit) const;
};

/// Support of the computational-basis measurement distribution.
AffineSubspace z_support(const StabilizerTableau &t);

}  // namespace qnet
