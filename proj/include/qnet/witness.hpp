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

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "qnet/distribution.hpp"
#include "qnet/network.hpp"
#include "qnet/pauli.hpp"
#include "qnet/rational.hpp"

namespace qnet::witness {

/// A row or column of the grid: three cell indices (row-major, 0..8) and the
/// sign their observables multiply to.
struct Context {
    std::array<std::size_t, 3> cells;
    int sign;
};

class MagicSquareGrid {
   public:
    /// The standard two-qubit Mermin-Peres square. Verifies commutation within
    /// each context and the row/column products.
    static const MagicSquareGrid &standard();

    const PauliOperator &cell(std::size_t y) const {
        return cells_.at(y);
    }
    /// Contexts 0..2 are rows, 3..5 columns.
    const Context &context(std::size_t x) const {
        return contexts_.at(x);
    }
    bool contains(std::size_t x, std::size_t y) const;
    /// Position (0..2) of cell y within context x; requires contains(x, y).
    std::size_t position(std::size_t x, std::size_t y) const;

    /// Common +1 eigenstate of the first two observables of context x.
    PureSource representative(std::size_t x) const;
    /// Smallest bare two-qubit Pauli (order I<X<Y<Z, qubit 0 first) that
    /// commutes with cell y and is neither identity nor the cell itself.
    PauliOperator auxiliary(std::size_t y) const;

   private:
    MagicSquareGrid();
    std::array<PauliOperator, 9> cells_;
    std::array<Context, 6> contexts_;
};

/// Bell bits in the order (s0, t0, s1, t1) where s is the register half and
/// t the shared half; the implied correction on qubit j is X^t_j Z^s_j.
using BellBits = std::array<bool, 4>;

PauliOperator correction(const BellBits &bits);

/// +1/-1 values of the three observables of context x on the corrected
/// representative.
std::array<int, 3> alice_answer(std::size_t x, const BellBits &bits);

/// +1 unless the correction anticommutes with cell y. Both branches of the
/// auxiliary decomposition lie in the +1 eigenspace of the cell, so
/// `component` does not change the answer.
int bob_answer(std::size_t y, const BellBits &bits, std::size_t component = 0);

/// Line network X - A - B - Y with post tables for both answers.
NetworkSpec magic_square_spec();

enum class Scoring {
    /// Condition on cell y lying in context x.
    Conditioned,
    /// Pairs with y outside x count as wins.
    AutoWin,
};

Rational winning_probability(const OutcomeDistribution &d, Scoring scoring = Scoring::Conditioned);

/// Per-(x, y) conditional win probability, only for pairs with y in x.
std::vector<std::array<Rational, 9>> score_table(const OutcomeDistribution &d);

/// Distribution of a deterministic strategy in the layout of
/// magic_square_spec(), with x and y uniform.
OutcomeDistribution strategy_distribution(const std::array<std::array<int, 3>, 6> &alice,
                                          const std::array<int, 9> &bob);

/// Maximum conditioned winning probability over deterministic strategies,
/// optionally restricting Bob to a constant answer.
Rational classical_bound(bool constant_bob = false);

}  // namespace qnet::witness
