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

#include <filesystem>
#include <fstream>

#include "qnet/error.hpp"
#include "qnet/network.hpp"
#include "qnet/network_io.hpp"
#include "test_support.hpp"

namespace qnet {
namespace {

const char *kBell = R"(qubits 2
edge ab vertices=0,1
  gens "+XX" "+ZZ"
party A vertices=0 ancillas=0
party B vertices=1 ancillas=0
)";

ErrorKind validate_kind(const std::string &text) {
    try {
        validate(parse_network(text));
    } catch (const Error &e) {
        return e.kind();
    }
    ADD_FAILURE() << "accepted:\n" << text;
    return ErrorKind::ParseError;
}

std::size_t parse_error_line(const std::string &text) {
    try {
        parse_network(text);
    } catch (const ParseError &e) {
        return e.line();
    }
    ADD_FAILURE() << "parsed:\n" << text;
    return 0;
}

TEST(NetworkTest, BellDistribution) {
    NetworkSpec spec = parse_network(kBell);
    EXPECT_EQ(validate(spec), 2u);
    OutcomeDistribution d = run_quantum(spec);
    EXPECT_EQ(d.support_size(), 2u);
    EXPECT_EQ(d.probability("00"), Rational(1, 2));
    EXPECT_EQ(d.probability("11"), Rational(1, 2));
}

TEST(NetworkTest, GhzHyperedgeGivesKThree) {
    NetworkSpec spec = corpus::ghz_triangle();
    EXPECT_EQ(validate(spec), 3u);
}

TEST(NetworkTest, PrintParseRoundTrip) {
    std::mt19937_64 rng(31);
    for (int i = 0; i < 60; i++) {
        NetworkSpec spec = i % 3 == 0 ? corpus::random_canonical(rng)
                           : i % 3 == 1 ? corpus::random_bipartite(rng)
                                        : corpus::random_mixed(rng);
        NetworkSpec back = parse_network(print_network(spec));
        EXPECT_EQ(print_network(back), print_network(spec));
        EXPECT_EQ(run_quantum(back), run_quantum(spec));
    }
}

TEST(NetworkTest, ParseErrorsCarryLineNumbers) {
    EXPECT_EQ(parse_error_line(""), 1u);
    EXPECT_EQ(parse_error_line("qubits 2\nedge ab vertices=0,1\n  gens \"+XQ\" \"+ZZ\"\n"), 3u);
    EXPECT_EQ(parse_error_line("qubits 2\nedge ab vertices=0,x\n"), 2u);
    EXPECT_EQ(parse_error_line("qubits 1\nedge a vertices=0\n  gens \"+Z\"\nparty A vertices=0 ancillas=0\n  circuit H\n"),
              5u);
    EXPECT_EQ(parse_error_line("qubits 1\nbogus\n"), 2u);
}

TEST(NetworkTest, ValidationErrors) {
    EXPECT_EQ(validate_kind("qubits 3\nedge a vertices=0,1\n  gens \"+XX\" \"+ZZ\"\nedge b vertices=1,2\n"
                            "  gens \"+XX\" \"+ZZ\"\nparty A vertices=0,1,2 ancillas=0\n"),
              ErrorKind::OverlappingEdges);
    EXPECT_EQ(validate_kind("qubits 3\nedge a vertices=0,1\n  gens \"+XX\" \"+ZZ\"\nparty A vertices=0,1 ancillas=0\n"),
              ErrorKind::UncoveredVertex);
    EXPECT_EQ(validate_kind("qubits 2\nedge a vertices=0,1\n  gens \"+XX\" \"+ZZ\"\nparty A vertices=0 ancillas=0\n"),
              ErrorKind::UncoveredVertex);
    EXPECT_EQ(validate_kind("qubits 2\nedge a vertices=0,1\n  gens \"+XX\" \"+ZZ\"\nparty A vertices=0,1 ancillas=0\n"
                            "party B vertices=1 ancillas=0\n"),
              ErrorKind::OverlappingParties);
    EXPECT_EQ(validate_kind("qubits 2\nedge a vertices=0,1\n  gens \"+XX\" \"+ZZ\"\nparty A vertices=0 ancillas=0\n"
                            "  circuit CX 0 1\nparty B vertices=1 ancillas=0\n"),
              ErrorKind::CircuitOutOfScope);
    EXPECT_EQ(validate_kind("qubits 2\nedge a vertices=0,1\n  mixed\n    component weight=1/3 gens \"+XX\" \"+ZZ\"\n"
                            "    component weight=1/3 gens \"+ZI\" \"+IZ\"\n  end\nparty A vertices=0,1 ancillas=0\n"),
              ErrorKind::BadWeights);
    EXPECT_EQ(validate_kind("qubits 2\nedge a vertices=0,1\n  mixed\n    component weight=1/2 gens \"+XX\" \"+ZZ\" label A=0\n"
                            "    component weight=1/2 gens \"+ZI\" \"+IZ\" label A=01\n  end\nparty A vertices=0,1 ancillas=0\n"),
              ErrorKind::BadLabels);
    EXPECT_EQ(validate_kind("qubits 2\nedge a vertices=0,1\n  gens \"+XXX\" \"+ZZI\" \"+IZZ\"\nparty A vertices=0,1 ancillas=0\n"),
              ErrorKind::WrongCount);
}

TEST(NetworkTest, AncillasAndCircuits) {
    // A holds one half of a Bell pair and an ancilla; CX copies the Z value.
    NetworkSpec spec = parse_network("qubits 2\nedge a vertices=0,1\n  gens \"+XX\" \"+ZZ\"\n"
                                     "party A vertices=0 ancillas=1\n  circuit CX 0 2\nparty B vertices=1 ancillas=0\n");
    OutcomeDistribution d = run_quantum(spec);
    EXPECT_EQ(d.probability("001"), Rational(0));
    EXPECT_EQ(d.probability("000"), Rational(1, 2));
    EXPECT_EQ(d.probability("111"), Rational(1, 2));
}

TEST(NetworkTest, MixedSourcesCarryLabels) {
    NetworkSpec spec = parse_network(R"(qubits 2
edge m vertices=0,1
  mixed
    component weight=1/3 gens "+XX" "+ZZ" label B=p
    component weight=2/3 gens "+ZI" "+IZ" label B=z
  end
party A vertices=0 ancillas=0
party B vertices=1 ancillas=0
)");
    OutcomeDistribution d = run_quantum(spec);
    EXPECT_EQ(d.layout()[1].width, 2u);
    EXPECT_EQ(d.probability("00p"), Rational(1, 6));
    EXPECT_EQ(d.probability("11p"), Rational(1, 6));
    EXPECT_EQ(d.probability("00z"), Rational(2, 3));
    EXPECT_EQ(d.total(), Rational(1));
}

TEST(NetworkTest, PostTables) {
    auto dir = std::filesystem::temp_directory_path() / "qnet_post_test";
    std::filesystem::create_directories(dir);
    std::ofstream(dir / "flip.post") << "0 1\n1 0\n";
    std::ofstream(dir / "net.qnet") << "qubits 2\nedge a vertices=0,1\n  gens \"+XX\" \"+ZZ\"\n"
                                       "party A vertices=0 ancillas=0\n  post flip.post\nparty B vertices=1 ancillas=0\n";
    NetworkSpec spec = read_network(dir / "net.qnet");
    OutcomeDistribution d = run_quantum(spec);
    EXPECT_EQ(d.probability("10"), Rational(1, 2));
    EXPECT_EQ(d.probability("01"), Rational(1, 2));

    std::ofstream(dir / "partial.post") << "0 1\n";
    std::ofstream(dir / "bad.qnet") << "qubits 2\nedge a vertices=0,1\n  gens \"+XX\" \"+ZZ\"\n"
                                       "party A vertices=0 ancillas=0\n  post partial.post\nparty B vertices=1 ancillas=0\n";
    try {
        run_quantum(read_network(dir / "bad.qnet"));
        ADD_FAILURE() << "missing entry accepted";
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::MissingPostEntry);
    }

    // Writing and re-reading keeps the table.
    write_network(spec, dir / "copy" / "net.qnet");
    EXPECT_EQ(run_quantum(read_network(dir / "copy" / "net.qnet")), d);
    std::filesystem::remove_all(dir);
}

TEST(NetworkTest, PreparationFormMatchesGenerators) {
    NetworkSpec a = parse_network(kBell);
    NetworkSpec b = parse_network("qubits 2\nedge ab vertices=0,1\n  prep H 0;CX 0 1\n"
                                  "party A vertices=0 ancillas=0\nparty B vertices=1 ancillas=0\n");
    EXPECT_EQ(run_quantum(a), run_quantum(b));
}

TEST(NetworkTest, ApplyPostTablesToRawDistribution) {
    NetworkSpec spec = parse_network(kBell);
    PostTable t;
    t.path = "copy.post";
    t.entries = {{"0", "00"}, {"1", "11"}};
    spec.parties[0].post = t;
    OutcomeDistribution raw = OutcomeDistribution::flat(2);
    raw.add("00", Rational(1, 2));
    raw.add("11", Rational(1, 2));
    OutcomeDistribution d = apply_post_tables(spec, raw);
    EXPECT_EQ(d, run_quantum(spec));
    EXPECT_EQ(d.probability("111"), Rational(1, 2));
}

}  // namespace
}  // namespace qnet
