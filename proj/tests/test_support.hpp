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

// Shared helpers for the tests: random objects and dense reference values.

#include <random>
#include <string>

#include <Eigen/Dense>

#include "qnet/corpus.hpp"
#include "qnet/oracle.hpp"
#include "qnet/pauli.hpp"
#include "qnet/stabilizer.hpp"

namespace qnet::testing {

inline PauliOperator random_pauli(std::mt19937_64 &rng, std::size_t n, bool real_only = false) {
    std::uniform_int_distribution<int> coin(0, 3);
    std::string text = real_only ? (coin(rng) & 1 ? "+" : "-") : std::string(1, "+-"[coin(rng) & 1]);
    if (!real_only && coin(rng) & 1) {
        text += "i";
    }
    for (std::size_t q = 0; q < n; q++) {
        text += "IXYZ"[coin(rng)];
    }
    return PauliOperator::parse(text);
}

/// Dense unitary of a circuit on n qubits, column b = U|b>.
inline Eigen::MatrixXcd circuit_unitary(std::size_t n, const CliffordCircuit &c) {
    const Eigen::Index dim = Eigen::Index{1} << n;
    Eigen::MatrixXcd u(dim, dim);
    for (Eigen::Index b = 0; b < dim; b++) {
        oracle::DenseState st(n);
        st.amplitudes().setZero();
        st.amplitudes()(b) = 1;
        st.apply(c);
        u.col(b) = st.amplitudes();
    }
    return u;
}

/// Amplitudes of the state stabilized by the tableau's generators.
inline Eigen::VectorXcd dense_vector(const StabilizerTableau &t) {
    return oracle::DenseState::from_source(PureSource::from_generators(t.stabilizers())).amplitudes();
}

inline StabilizerTableau random_tableau(std::mt19937_64 &rng, std::size_t n) {
    return corpus::random_state(rng, n).tableau();
}

}  // namespace qnet::testing
