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

// Acceptance run: one PASS or FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "qnet/canonical.hpp"
#include "qnet/corpus.hpp"
#include "qnet/error.hpp"
#include "qnet/lhv.hpp"
#include "qnet/network_io.hpp"
#include "qnet/oracle.hpp"
#include "qnet/reduction.hpp"
#include "qnet/witness.hpp"

using namespace qnet;

namespace {

// Pinned thresholds.
constexpr double kRoundTripSeconds = 60.0;
constexpr double kBoundSeconds = 30.0;
constexpr double kTvTolerance = 1e-9;
constexpr std::size_t kCanonicalCount = 200;
constexpr std::size_t kBipartiteCount = 100;
constexpr std::size_t kHyperCount = 50;
constexpr std::size_t kMixedCount = 100;
constexpr std::size_t kChannelCount = 100;
constexpr std::size_t kPairCount = 1000;
constexpr std::size_t kBridgeMaxQubits = 8;
constexpr std::size_t kHyperMaxVertices = 6;

struct Result {
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok, const std::string &what) {
        if (!ok) {
            pass = false;
            detail << " [failed: " << what << "]";
        }
    }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::vector<NetworkSpec> canonical_corpus() {
    corpus::Rng rng(1);
    std::vector<NetworkSpec> out;
    for (std::size_t i = 0; i < kCanonicalCount; i++) {
        out.push_back(corpus::random_canonical(rng));
    }
    return out;
}

std::vector<std::size_t> qubit_at(const NetworkSpec &spec) {
    std::vector<std::size_t> out;
    for (std::size_t p = 0; p < spec.parties.size(); p++) {
        for (auto q : spec.party_qubits(p)) {
            out.push_back(q);
        }
    }
    return out;
}

Result criterion_1(const std::vector<NetworkSpec> &specs) {
    Result r;
    auto t0 = std::chrono::steady_clock::now();
    std::size_t bad = 0;
    for (const auto &spec : specs) {
        if (lhv::evaluate_for(spec, lhv::synthesize(spec)) != run_quantum(spec)) {
            bad++;
        }
    }
    double s = seconds_since(t0);
    r.detail << specs.size() << " specs, " << bad << " mismatches, " << s << " s";
    r.require(bad == 0, "exact round trip");
    r.require(s < kRoundTripSeconds, "runtime");
    return r;
}

Result criterion_2() {
    Result r;
    corpus::Rng rng(2);
    std::size_t layout_bad = 0, round_bad = 0;
    for (std::size_t i = 0; i < kBipartiteCount; i++) {
        NetworkSpec spec = corpus::random_bipartite(rng);
        canonical::Canonicalized c = canonical::canonicalize(spec);
        OutcomeDistribution original = run_quantum(spec);
        OutcomeDistribution canonical = run_quantum(c.spec);
        if (canonical::apply_layout(canonical, c.layout, original.layout()) != original) {
            layout_bad++;
        }
        if (lhv::evaluate_for(c.spec, lhv::synthesize(c.spec)) != canonical) {
            round_bad++;
        }
    }
    r.detail << kBipartiteCount << " specs, " << layout_bad << " canonicalization mismatches, " << round_bad
             << " round-trip mismatches";
    r.require(layout_bad == 0, "canonicalization preserves distribution");
    r.require(round_bad == 0, "round trip on canonical form");
    return r;
}

Rational quarter_power(std::size_t m) {
    Rational p = 1;
    for (std::size_t i = 0; i < m; i++) {
        p /= 4;
    }
    return p;
}

Result criterion_3() {
    Result r;
    corpus::Rng rng(3);
    std::vector<NetworkSpec> specs{corpus::ghz_triangle()};
    while (specs.size() < kHyperCount) {
        NetworkSpec spec = corpus::random_hyper(rng);
        if (spec.num_vertices <= kHyperMaxVertices) {
            specs.push_back(spec);
        }
    }
    std::size_t bad = 0;
    for (const auto &spec : specs) {
        std::size_t total = 0;
        for (const auto &e : spec.edges) {
            total += e.vertices.size();
        }
        reduction::ReductionReport rep = reduction::verify_reduction(spec);
        if (!rep.equal || rep.postselect_prob != quarter_power(total)) {
            bad++;
        }
    }
    Rational ghz = reduction::verify_reduction(corpus::ghz_triangle()).postselect_prob;
    r.detail << specs.size() << " specs, " << bad << " failures, GHZ triangle postselection " << ghz;
    r.require(bad == 0, "conditional equality and postselection");
    r.require(ghz == Rational(1, 64), "GHZ triangle 1/64");
    return r;
}

Result criterion_4() {
    Result r;
    NetworkSpec spec = witness::magic_square_spec();
    Rational value = witness::winning_probability(run_quantum(spec));
    auto t0 = std::chrono::steady_clock::now();
    Rational bound = witness::classical_bound();
    double s = seconds_since(t0);
    bool refused = false;
    try {
        lhv::synthesize(spec);
    } catch (const Error &e) {
        refused = e.kind() == ErrorKind::MixedSourcePresent;
    }
    r.detail << "quantum " << value << ", classical " << bound << " in " << s << " s, nonlocal "
             << (value > bound ? "true" : "false") << ", lhv refused " << (refused ? "true" : "false");
    r.require(value == Rational(1), "quantum value 1");
    r.require(bound == Rational(8, 9), "classical bound 8/9");
    r.require(s < kBoundSeconds, "bound runtime");
    r.require(value > bound, "nonlocal verdict");
    r.require(refused, "MixedSourcePresent");
    return r;
}

Result criterion_5() {
    Result r;
    corpus::Rng rng(5);
    double worst = 0;
    std::size_t mixed = 0;
    for (std::size_t i = 0; i < kMixedCount; i++) {
        NetworkSpec spec = corpus::random_mixed(rng);
        mixed += spec.has_mixed_source() ? 1 : 0;
        worst = std::max(worst, total_variation(run_quantum(spec), oracle::statevector_run(spec)));
    }
    r.detail << kMixedCount << " specs (" << mixed << " mixed), max TV " << worst;
    r.require(worst <= kTvTolerance, "total variation");
    r.require(mixed > 0 && mixed < kMixedCount, "pure and mixed sources present");
    return r;
}

Eigen::MatrixXcd random_complex(corpus::Rng &rng, Eigen::Index d) {
    std::normal_distribution<double> g;
    Eigen::MatrixXcd m(d, d);
    for (Eigen::Index i = 0; i < d; i++) {
        for (Eigen::Index j = 0; j < d; j++) {
            m(i, j) = oracle::Complex(g(rng), g(rng));
        }
    }
    return m;
}

oracle::ChannelMatrix random_channel(corpus::Rng &rng, Eigen::Index d) {
    std::vector<Eigen::MatrixXcd> ks;
    Eigen::MatrixXcd s = Eigen::MatrixXcd::Zero(d, d);
    for (int k = 0; k < 3; k++) {
        ks.push_back(random_complex(rng, d));
        s += ks.back().adjoint() * ks.back();
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(s);
    for (auto &k : ks) {
        k = k * eig.operatorInverseSqrt();
    }
    return oracle::ChannelMatrix::kraus(ks);
}

Result criterion_6() {
    Result r;
    corpus::Rng rng(6);
    using oracle::ChannelMatrix;
    bool dephasing = true, stochastic = true;
    for (std::size_t d = 2; d <= 4; d++) {
        dephasing = dephasing && oracle::check_classically_simulatable(ChannelMatrix::dephasing(d));
    }
    std::uniform_real_distribution<double> u(0, 1);
    for (std::size_t i = 0; i < kChannelCount; i++) {
        Eigen::Index d = 2 + static_cast<Eigen::Index>(i % 3);
        Eigen::MatrixXd t(d, d);
        for (Eigen::Index j = 0; j < d; j++) {
            for (Eigen::Index k = 0; k < d; k++) {
                t(k, j) = u(rng);
            }
            t.col(j) /= t.col(j).sum();
        }
        stochastic = stochastic && oracle::check_classically_simulatable(ChannelMatrix::stochastic(t));
    }
    Eigen::MatrixXcd h(2, 2);
    h << 1, 1, 1, -1;
    h /= std::sqrt(2.0);
    Eigen::MatrixXcd s = Eigen::MatrixXcd::Identity(2, 2);
    s(1, 1) = oracle::Complex(0, 1);
    bool hadamard = oracle::check_classically_simulatable(ChannelMatrix::unitary(h));
    bool phase = oracle::check_classically_simulatable(ChannelMatrix::unitary(s));
    std::size_t dephased_out = 0, dephased_in = 0;
    for (std::size_t i = 0; i < kChannelCount; i++) {
        std::size_t d = 2 + i % 3;
        ChannelMatrix e = random_channel(rng, static_cast<Eigen::Index>(d));
        dephased_out += oracle::check_classically_simulatable(ChannelMatrix::dephasing(d).after(e)) ? 1 : 0;
        dephased_in += oracle::check_classically_simulatable(e.after(ChannelMatrix::dephasing(d))) ? 1 : 0;
    }
    r.detail << "dephasing " << dephasing << ", stochastic " << stochastic << ", hadamard " << hadamard
             << ", phase " << phase << ", dephased output " << dephased_out << "/" << kChannelCount
             << ", dephased input " << dephased_in << "/" << kChannelCount;
    r.require(dephasing, "dephasing passes");
    r.require(stochastic, "stochastic channels pass");
    r.require(!hadamard, "Hadamard fails");
    r.require(!phase, "S conjugation fails");
    r.require(dephased_out == kChannelCount, "dephased output passes");
    return r;
}

OutcomeDistribution random_distribution(corpus::Rng &rng, std::size_t n) {
    std::vector<unsigned> w(std::size_t{1} << n);
    unsigned total = 0;
    for (auto &x : w) {
        x = rng() % 3 == 0 ? 0 : static_cast<unsigned>(rng() % 5);
        total += x;
    }
    if (total == 0) {
        w[0] = total = 1;
    }
    OutcomeDistribution d = OutcomeDistribution::flat(n);
    for (std::size_t b = 0; b < w.size(); b++) {
        if (w[b]) {
            std::string key(n, '0');
            for (std::size_t q = 0; q < n; q++) {
                key[q] = (b >> q) & 1 ? '1' : '0';
            }
            d.add(key, Rational(w[b], total));
        }
    }
    return d;
}

Result criterion_7(const std::vector<NetworkSpec> &specs) {
    Result r;
    corpus::Rng rng(7);
    std::size_t disagree = 0, equal_pairs = 0;
    for (std::size_t i = 0; i < kPairCount; i++) {
        std::size_t n = 1 + i % 4;
        OutcomeDistribution a = random_distribution(rng, n);
        OutcomeDistribution b = i % 3 == 0 ? a : random_distribution(rng, n);
        bool direct = lhv::equal_direct(a, b);
        equal_pairs += direct ? 1 : 0;
        disagree += lhv::equal_distributions(a, b) != direct ? 1 : 0;
    }
    std::size_t instances = 0, subsets = 0, bridge_bad = 0;
    for (const auto &spec : specs) {
        if (spec.num_qubits() > kBridgeMaxQubits) {
            continue;
        }
        instances++;
        auto gs = lhv::conjugated_observables(spec);
        StabilizerTableau state = lhv::network_state(spec, lhv::canonical_structure(spec));
        auto spectrum = lhv::parity_spectrum(run_quantum(spec));
        auto pos = qubit_at(spec);
        for (std::size_t s = 0; s < spectrum.size(); s++) {
            BitVec subset(gs.size());
            for (std::size_t i = 0; i < pos.size(); i++) {
                if ((s >> i) & 1) {
                    subset.set(pos[i], true);
                }
            }
            Membership m = membership(state, lhv::subset_product(gs, subset));
            Rational expected = m == Membership::PlusMember    ? 1
                                : m == Membership::MinusMember ? 0
                                                               : Rational(1, 2);
            subsets++;
            bridge_bad += spectrum[s] != expected ? 1 : 0;
        }
    }
    r.detail << kPairCount << " pairs (" << equal_pairs << " equal), " << disagree << " disagreements; bridge "
             << subsets << " subsets over " << instances << " instances, " << bridge_bad << " mismatches";
    r.require(disagree == 0, "spectrum vs direct comparison");
    r.require(instances > 0 && bridge_bad == 0, "membership bridge");
    return r;
}

Result criterion_8(const std::vector<NetworkSpec> &specs) {
    Result r;
    std::size_t bad = 0;
    for (const auto &spec : specs) {
        lhv::LocalModel m = lhv::synthesize(spec);
        if (lhv::evaluate_for(spec, m, lhv::Variant::Trio) != lhv::evaluate_for(spec, m, lhv::Variant::TwoBit)) {
            bad++;
        }
    }
    r.detail << specs.size() << " specs, " << bad << " where three bits per edge differ from two";
    r.require(bad == 0, "Trio equals TwoBit");
    return r;
}

}  // namespace

int main() {
    std::vector<NetworkSpec> corpus1 = canonical_corpus();
    std::vector<std::pair<int, std::function<Result()>>> criteria{
        {1, [&] { return criterion_1(corpus1); }},
        {2, criterion_2},
        {3, criterion_3},
        {4, criterion_4},
        {5, criterion_5},
        {6, criterion_6},
        {7, [&] { return criterion_7(corpus1); }},
        {8, [&] { return criterion_8(corpus1); }},
    };
    int failed = 0;
    for (auto &[id, run] : criteria) {
        Result r;
        try {
            r = run();
        } catch (const std::exception &e) {
            r.pass = false;
            r.detail << "exception: " << e.what();
        }
        failed += r.pass ? 0 : 1;
        std::printf("criterion %d: %s  %s\n", id, r.pass ? "PASS" : "FAIL", r.detail.str().c_str());
        std::fflush(stdout);
    }
    return failed == 0 ? 0 : 1;
}
