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

#include <gtest/gtest.h>

#include "qnet/circuit.hpp"
#include "qnet/error.hpp"
#include "qnet/pauli.hpp"
#include "test_support.hpp"

namespace qnet {
namespace {

using testing::circuit_unitary;
using testing::random_pauli;

TEST(PauliTest, ParseAndPrint) {
    EXPECT_EQ(PauliOperator::parse("+XZ").str(), "+XZ");
    EXPECT_EQ(PauliOperator::parse("XZ").str(), "+XZ");
    EXPECT_EQ(PauliOperator::parse("-iY_I").str(), "-iYII");
    EXPECT_EQ(PauliOperator::parse("+iZ").phase(), 1);
    EXPECT_EQ(PauliOperator::parse("-Z").sign(), -1);
    EXPECT_THROW(PauliOperator::parse("+XQ"), ParseError);
    EXPECT_THROW(PauliOperator::parse("+"), ParseError);
}

TEST(PauliTest, SingleQubitProducts) {
    EXPECT_EQ(multiply(PauliOperator::parse("X"), PauliOperator::parse("Z")), PauliOperator::parse("-iY"));
    EXPECT_EQ(multiply(PauliOperator::parse("Z"), PauliOperator::parse("X")), PauliOperator::parse("+iY"));
    EXPECT_EQ(multiply(PauliOperator::parse("Y"), PauliOperator::parse("Y")), PauliOperator::parse("I"));
    EXPECT_EQ(multiply(PauliOperator::parse("XX"), PauliOperator::parse("ZZ")), PauliOperator::parse("-YY"));
}

TEST(PauliTest, MultiplyMatchesDenseMatrices) {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 300; i++) {
        std::size_t n = 1 + i % 4;
        PauliOperator p = random_pauli(rng, n), q = random_pauli(rng, n);
        Eigen::MatrixXcd expected = oracle::pauli_matrix(p) * oracle::pauli_matrix(q);
        EXPECT_LT((oracle::pauli_matrix(multiply(p, q)) - expected).cwiseAbs().maxCoeff(), 1e-12) << p.str() << q.str();
    }
}

TEST(PauliTest, CommutesMatchesCommutator) {
    std::mt19937_64 rng(12);
    for (int i = 0; i < 300; i++) {
        std::size_t n = 1 + i % 4;
        PauliOperator p = random_pauli(rng, n), q = random_pauli(rng, n);
        Eigen::MatrixXcd a = oracle::pauli_matrix(p), b = oracle::pauli_matrix(q);
        bool dense = (a * b - b * a).cwiseAbs().maxCoeff() < 1e-12;
        EXPECT_EQ(commutes(p, q), dense) << p.str() << " " << q.str();
    }
}

TEST(PauliTest, GateRules) {
    auto conj = [](const char *p, const char *c) {
        return conjugate(PauliOperator::parse(p), CliffordCircuit::parse(c)).str();
    };
    EXPECT_EQ(conj("X", "H 0"), "+Z");
    EXPECT_EQ(conj("Y", "H 0"), "-Y");
    EXPECT_EQ(conj("X", "S 0"), "+Y");
    EXPECT_EQ(conj("Y", "S 0"), "-X");
    EXPECT_EQ(conj("XI", "CX 0 1"), "+XX");
    EXPECT_EQ(conj("IZ", "CX 0 1"), "+ZZ");
    EXPECT_EQ(conj("XI", "CZ 0 1"), "+XZ");
    EXPECT_EQ(conj("Z", "X 0"), "-Z");
}

TEST(PauliTest, ConjugationMatchesDenseUnitary) {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 200; i++) {
        std::size_t n = 1 + i % 4;
        std::vector<std::size_t> qubits(n);
        for (std::size_t q = 0; q < n; q++) {
            qubits[q] = q;
        }
        CliffordCircuit c = corpus::random_circuit(rng, qubits, 12);
        PauliOperator p = random_pauli(rng, n);
        Eigen::MatrixXcd u = circuit_unitary(n, c);
        Eigen::MatrixXcd expected = u * oracle::pauli_matrix(p) * u.adjoint();
        EXPECT_LT((oracle::pauli_matrix(conjugate(p, c)) - expected).cwiseAbs().maxCoeff(), 1e-10)
            << p.str() << " under " << c.str();
    }
}

TEST(PauliTest, ConjugationRejectsOutOfRangeGates) {
    EXPECT_THROW(conjugate(PauliOperator::parse("XX"), CliffordCircuit::parse("CX 0 2")), Error);
}

TEST(PauliTest, DimensionMismatch) {
    EXPECT_THROW(multiply(PauliOperator::parse("X"), PauliOperator::parse("XX")), Error);
    EXPECT_THROW(commutes(PauliOperator::parse("X"), PauliOperator::parse("XX")), Error);
}

TEST(PauliTest, Supports) {
    PauliSupports s = supports(PauliOperator::parse("-XYZIY"));
    EXPECT_EQ(s.x, std::vector<std::size_t>({0}));
    EXPECT_EQ(s.y, std::vector<std::size_t>({1, 4}));
    EXPECT_EQ(s.z, std::vector<std::size_t>({2}));
}

TEST(PauliTest, RestrictEmbedTensor) {
    PauliOperator p = PauliOperator::parse("-XYZ");
    EXPECT_EQ(p.restricted({2, 0}).str(), "-ZX");
    EXPECT_EQ(PauliOperator::parse("+XZ").embedded(4, {3, 1}).str(), "+IZIX");
    EXPECT_EQ(PauliOperator::parse("-X").tensor(PauliOperator::parse("-Z")).str(), "+XZ");
}

TEST(CircuitTest, ParsePrintInverse) {
    CliffordCircuit c = CliffordCircuit::parse("H 0; S 1;CX 0 1 ; CZ 1 2");
    EXPECT_EQ(c.str(), "H 0;S 1;CX 0 1;CZ 1 2");
    EXPECT_EQ(c.width(), 3u);
    Eigen::MatrixXcd u = circuit_unitary(3, c);
    Eigen::MatrixXcd v = circuit_unitary(3, c.inverse());
    EXPECT_LT((v * u - Eigen::MatrixXcd::Identity(8, 8)).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_THROW(CliffordCircuit::parse("T 0"), ParseError);
    EXPECT_THROW(CliffordCircuit::parse("CX 1 1"), ParseError);
    EXPECT_THROW(CliffordCircuit::parse("H"), ParseError);
}

}  // namespace
}  // namespace qnet
