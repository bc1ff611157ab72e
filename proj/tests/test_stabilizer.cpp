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

#include <cmath>

#include "qnet/distribution.hpp"
#include "qnet/error.hpp"
#include "qnet/gf2.hpp"
#include "qnet/stabilizer.hpp"
#include "test_support.hpp"

namespace qnet {
namespace {

using testing::dense_vector;
using testing::random_pauli;
using testing::random_tableau;

ErrorKind kind_of(const std::function<void()> &f) {
    try {
        f();
    } catch (const Error &e) {
        return e.kind();
    }
    ADD_FAILURE() << "no exception";
    return ErrorKind::ParseError;
}

TEST(StabilizerTest, ConstructionErrors) {
    EXPECT_EQ(kind_of([] { state_from_generators({"+XX"}); }), ErrorKind::WrongCount);
    EXPECT_EQ(kind_of([] { state_from_generators({"+XI", "+ZI"}); }), ErrorKind::NonCommuting);
    EXPECT_EQ(kind_of([] { state_from_generators({"+XX", "-XX"}); }), ErrorKind::Dependent);
    EXPECT_EQ(kind_of([] { state_from_generators({"+iXX", "+ZZ"}); }), ErrorKind::ImaginarySign);
    EXPECT_EQ(kind_of([] { state_from_generators({"+XX", "+Z"}); }), ErrorKind::DimensionError);
}

TEST(StabilizerTest, DestabilizersPairUp) {
    std::mt19937_64 rng(21);
    for (int i = 0; i < 50; i++) {
        StabilizerTableau t = random_tableau(rng, 1 + i % 6);
        const auto &s = t.stabilizers();
        const auto &d = t.destabilizers();
        for (std::size_t a = 0; a < s.size(); a++) {
            for (std::size_t b = 0; b < s.size(); b++) {
                EXPECT_EQ(commutes(d[a], s[b]), a != b);
                EXPECT_TRUE(commutes(d[a], d[b]));
            }
        }
    }
}

TEST(StabilizerTest, BellMembership) {
    StabilizerTableau bell = state_from_generators({"+XX", "+ZZ"});
    EXPECT_EQ(membership(bell, PauliOperator::parse("-YY")), Membership::PlusMember);
    EXPECT_EQ(membership(bell, PauliOperator::parse("+YY")), Membership::MinusMember);
    EXPECT_EQ(membership(bell, PauliOperator::parse("+XI")), Membership::NonMember);
    EXPECT_EQ(membership(bell, PauliOperator::parse("+II")), Membership::PlusMember);
    EXPECT_THROW(membership(bell, PauliOperator::parse("+iXX")), Error);
    EXPECT_THROW(membership(bell, PauliOperator::parse("+X")), Error);
}

// <psi|P|psi> is +1, -1 or 0 exactly when P is a plus member, minus member or neither.
TEST(StabilizerTest, MembershipMatchesExpectationValues) {
    std::mt19937_64 rng(22);
    for (int i = 0; i < 200; i++) {
        std::size_t n = 1 + i % 5;
        StabilizerTableau t = random_tableau(rng, n);
        Eigen::VectorXcd psi = dense_vector(t);
        for (int j = 0; j < 5; j++) {
            PauliOperator p = random_pauli(rng, n, true);
            if (j == 0) {
                p = t.stabilizers()[0] * t.stabilizers()[n - 1];
            }
            double ev = (psi.adjoint() * oracle::pauli_matrix(p) * psi)(0).real();
            Membership m = membership(t, p);
            double expected = m == Membership::PlusMember ? 1 : m == Membership::MinusMember ? -1 : 0;
            EXPECT_NEAR(ev, expected, 1e-9) << p.str();
        }
    }
}

TEST(StabilizerTest, CircuitMatchesDenseEvolution) {
    std::mt19937_64 rng(23);
    for (int i = 0; i < 100; i++) {
        std::size_t n = 1 + i % 5;
        std::vector<std::size_t> qubits(n);
        for (std::size_t q = 0; q < n; q++) {
            qubits[q] = q;
        }
        StabilizerTableau t = random_tableau(rng, n);
        CliffordCircuit c = corpus::random_circuit(rng, qubits, 15);
        Eigen::VectorXcd expected = testing::circuit_unitary(n, c) * dense_vector(t);
        Eigen::VectorXcd got = dense_vector(apply_circuit(t, c));
        EXPECT_NEAR(std::abs(got.dot(expected)), 1.0, 1e-9);
    }
}

TEST(StabilizerTest, ZSupportMatchesBornRule) {
    std::mt19937_64 rng(24);
    for (int i = 0; i < 150; i++) {
        std::size_t n = 1 + i % 6;
        StabilizerTableau t = random_tableau(rng, n);
        Eigen::VectorXcd psi = dense_vector(t);
        OutcomeDistribution d = z_distribution(t);
        EXPECT_EQ(d.total(), Rational(1));
        for (Eigen::Index b = 0; b < psi.size(); b++) {
            std::string key(n, '0');
            for (std::size_t q = 0; q < n; q++) {
                key[q] = (b >> q) & 1 ? '1' : '0';
            }
            EXPECT_NEAR(d.probability(key).convert_to<double>(), std::norm(psi(b)), 1e-12);
        }
    }
}

TEST(StabilizerTest, ZeroStateAndTensor) {
    StabilizerTableau t = tensor(zero_state(1), state_from_generators({"+XX", "+ZZ"}));
    EXPECT_EQ(membership(t, PauliOperator::parse("+ZII")), Membership::PlusMember);
    EXPECT_EQ(membership(t, PauliOperator::parse("+IXX")), Membership::PlusMember);
    EXPECT_EQ(z_support(t).dimension(), 1u);
}

TEST(StabilizerTest, EmbedRequiresCoverage) {
    StabilizerTableau a = zero_state(1);
    EXPECT_THROW(embed_tableaus(3, {&a}, {{0}}), Error);
}

TEST(Gf2Test, RankAndKernels) {
    std::mt19937_64 rng(25);
    for (int i = 0; i < 100; i++) {
        std::size_t rows = 1 + i % 7, cols = 1 + (i / 7) % 7;
        gf2::Matrix m;
        for (std::size_t r = 0; r < rows; r++) {
            BitVec v(cols);
            for (std::size_t c = 0; c < cols; c++) {
                v.set(c, rng() & 1);
            }
            m.push_back(v);
        }
        std::size_t rk = gf2::rank(m);
        auto left = gf2::left_kernel(m, cols);
        auto right = gf2::right_kernel(m, cols);
        EXPECT_EQ(left.size(), rows - rk);
        EXPECT_EQ(right.size(), cols - rk);
        for (const auto &c : left) {
            BitVec acc(cols);
            for (std::size_t r = 0; r < rows; r++) {
                if (c.get(r)) {
                    acc ^= m[r];
                }
            }
            EXPECT_FALSE(acc.any());
        }
        for (const auto &v : right) {
            for (const auto &row : m) {
                EXPECT_FALSE(dot(row, v));
            }
        }
    }
}

TEST(Gf2Test, SolveLexminIsSmallest) {
    std::mt19937_64 rng(26);
    for (int i = 0; i < 100; i++) {
        std::size_t rows = 1 + i % 4, cols = 1 + (i / 4) % 6;
        gf2::Matrix m;
        BitVec rhs(rows);
        for (std::size_t r = 0; r < rows; r++) {
            BitVec v(cols);
            for (std::size_t c = 0; c < cols; c++) {
                v.set(c, rng() & 1);
            }
            m.push_back(v);
            rhs.set(r, rng() & 1);
        }
        // Brute force: bit 0 is most significant.
        std::optional<std::string> best;
        for (unsigned x = 0; x < (1u << cols); x++) {
            BitVec v(cols);
            for (std::size_t c = 0; c < cols; c++) {
                v.set(c, (x >> c) & 1);
            }
            bool ok = true;
            for (std::size_t r = 0; r < rows; r++) {
                ok = ok && dot(m[r], v) == rhs.get(r);
            }
            if (ok && (!best || v.str() < *best)) {
                best = v.str();
            }
        }
        auto got = gf2::solve_lexmin(m, rhs, cols);
        ASSERT_EQ(got.has_value(), best.has_value());
        if (got) {
            EXPECT_EQ(got->str(), *best);
        }
    }
}

TEST(DistributionTest, ConditionAndMarginal) {
    OutcomeDistribution d = OutcomeDistribution::flat(2);
    d.add("00", Rational(1, 2));
    d.add("01", Rational(1, 4));
    d.add("11", Rational(1, 4));
    auto [c, p] = condition(d, {1}, "1");
    EXPECT_EQ(p, Rational(1, 2));
    EXPECT_EQ(c.probability("01"), Rational(1, 2));
    OutcomeDistribution m = marginal(d, {0});
    EXPECT_EQ(m.probability("0"), Rational(3, 4));
    EXPECT_THROW(d.add("0", 1), Error);
    OutcomeDistribution only = OutcomeDistribution::flat(1);
    only.add("0", 1);
    EXPECT_THROW(condition(only, {0}, "1"), Error);
}

}  // namespace
}  // namespace qnet
