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

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "qnet/canonical.hpp"
#include "qnet/corpus.hpp"
#include "qnet/error.hpp"
#include "qnet/lhv.hpp"
#include "qnet/network_io.hpp"
#include "qnet/oracle.hpp"
#include "qnet/reduction.hpp"
#include "qnet/witness.hpp"

namespace {

using namespace qnet;
using json = nlohmann::ordered_json;

std::string read_text(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw Error(ErrorKind::ParseError, "cannot open " + path);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json layout_json(const std::vector<Segment> &layout) {
    json out = json::array();
    for (const auto &s : layout) {
        out.push_back({{"party", s.party}, {"width", s.width}});
    }
    return out;
}

int cmd_validate(const std::string &path) {
    NetworkSpec spec = read_network(path);
    std::size_t k = validate(spec);
    std::cout << "k=" << k << "\n";
    std::cout << "vertices " << spec.num_vertices << "\n";
    std::cout << "ancillas " << spec.num_ancillas() << "\n";
    std::cout << "edges " << spec.edges.size() << "\n";
    std::cout << "parties " << spec.parties.size() << "\n";
    std::cout << "components " << spec.component_count() << "\n";
    return 0;
}

int cmd_run(const std::string &path, bool with_oracle, const std::string &format) {
    NetworkSpec spec = read_network(path);
    OutcomeDistribution d = run_quantum(spec);
    std::map<std::string, double> approx;
    double deviation = 0;
    if (with_oracle) {
        approx = oracle::statevector_run(spec);
        deviation = total_variation(d, approx);
    }
    auto approx_at = [&](const std::string &key) {
        auto it = approx.find(key);
        return it == approx.end() ? 0.0 : it->second;
    };
    if (format == "json") {
        json j;
        j["layout"] = layout_json(d.layout());
        j["entries"] = json::array();
        for (const auto &[key, p] : d.entries()) {
            json e = {{"outcome", key}, {"probability", to_string(p)}};
            if (with_oracle) {
                e["oracle"] = approx_at(key);
            }
            j["entries"].push_back(e);
        }
        if (with_oracle) {
            j["max_deviation"] = deviation;
        }
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout.precision(17);
    for (const auto &[key, p] : d.entries()) {
        std::cout << key << "\t" << to_string(p);
        if (with_oracle) {
            std::cout << "\t" << approx_at(key);
        }
        std::cout << "\n";
    }
    if (with_oracle) {
        std::cout << "# max_deviation " << deviation << "\n";
    }
    return 0;
}

int cmd_lhv(const std::string &path, bool trio, const std::string &emit_model) {
    NetworkSpec spec = read_network(path);
    validate(spec);
    bool canonicalized = false;
    try {
        lhv::canonical_structure(spec);
    } catch (const Error &e) {
        if (e.kind() != ErrorKind::NotCanonical) {
            throw;
        }
        spec = canonical::canonicalize(spec).spec;
        canonicalized = true;
    }
    lhv::Variant variant = trio ? lhv::Variant::Trio : lhv::Variant::TwoBit;
    lhv::LocalModel model = lhv::synthesize(spec);
    OutcomeDistribution quantum = run_quantum(spec);
    OutcomeDistribution local = lhv::evaluate_for(spec, model, variant);
    bool equal = lhv::equal_direct(quantum, local);
    std::cout << "equal: " << (equal ? "true" : "false") << "\n";
    std::cout << "variant " << (trio ? "trio" : "twobit") << "\n";
    std::cout << "canonicalized " << (canonicalized ? "true" : "false") << "\n";
    std::cout << "assignments " << lhv::assignment_count(model, variant) << "\n";
    if (emit_model == "-") {
        std::cout << model.serialize();
    } else if (!emit_model.empty()) {
        std::ofstream(emit_model) << model.serialize();
    }
    return equal ? 0 : 1;
}

int cmd_reduce(const std::string &path, const std::string &out) {
    NetworkSpec spec = read_network(path);
    std::size_t k = validate(spec);
    reduction::Reduced r = reduction::teleport_reduce(spec);
    write_network(r.spec, out);
    std::cout << "k_before " << k << "\n";
    std::cout << "k_after " << validate(r.spec) << "\n";
    std::cout << "teleported_qubits " << r.teleported_qubits << "\n";
    return 0;
}

int cmd_verify_reduction(const std::string &path, const std::string &format) {
    NetworkSpec spec = read_network(path);
    reduction::ReductionReport rep = reduction::verify_reduction(spec);
    std::cout << (format == "json" ? rep.to_json() : rep.to_text());
    return rep.equal && rep.postselect_prob == rep.expected_prob ? 0 : 1;
}

int cmd_witness(bool bound, const std::string &scoring_name, bool table, const std::string &emit_dir) {
    witness::Scoring scoring =
        scoring_name == "autowin" ? witness::Scoring::AutoWin : witness::Scoring::Conditioned;
    NetworkSpec spec = witness::magic_square_spec();
    if (!emit_dir.empty()) {
        write_network(spec, std::filesystem::path(emit_dir) / "magic_square.qnet");
    }
    OutcomeDistribution d = run_quantum(spec);
    Rational value = witness::winning_probability(d, scoring);
    Rational classical = witness::classical_bound();
    std::cout << "quantum_value " << to_string(value) << "\n";
    if (bound) {
        std::cout << "classical_bound " << to_string(classical) << "\n";
    }
    bool nonlocal = value > classical;
    std::cout << "nonlocal " << (nonlocal ? "true" : "false") << "\n";
    std::cout << "scoring " << (scoring == witness::Scoring::AutoWin ? "autowin" : "conditioned") << "\n";
    if (table) {
        auto t = witness::score_table(d);
        const auto &grid = witness::MagicSquareGrid::standard();
        std::cout << "x\ty\twin\n";
        for (std::size_t x = 0; x < 6; x++) {
            for (std::size_t y = 0; y < 9; y++) {
                if (grid.contains(x, y)) {
                    std::cout << x + 1 << "\t" << y + 1 << "\t" << to_string(t[x][y]) << "\n";
                }
            }
        }
    }
    return nonlocal ? 0 : 1;
}

int cmd_check_channel(const std::string &path) {
    oracle::ChannelMatrix ch = oracle::ChannelMatrix::parse(read_text(path));
    bool ok = oracle::check_classically_simulatable(ch);
    std::cout << "dim " << ch.dim << "\n";
    std::cout << "simulatable " << (ok ? "true" : "false") << "\n";
    return 0;
}

int cmd_gen(const std::string &kind, std::uint64_t seed, const std::string &out) {
    corpus::Rng rng(seed);
    NetworkSpec spec;
    if (kind == "canonical") {
        spec = corpus::random_canonical(rng);
    } else if (kind == "bipartite") {
        spec = corpus::random_bipartite(rng);
    } else if (kind == "hyper") {
        spec = corpus::random_hyper(rng);
    } else {
        spec = corpus::random_mixed(rng);
    }
    if (out.empty() || out == "-") {
        std::cout << print_network(spec);
    } else {
        write_network(spec, out);
    }
    return 0;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Clifford network simulator and local-model checker"};
    app.require_subcommand(1);

    std::string path, format = "tsv", out, emit_model, scoring = "conditioned", emit_dir, kind = "canonical";
    bool with_oracle = false, trio = false, pusey = false, bound = false, table = false;
    std::uint64_t seed = 1;

    auto *validate_cmd = app.add_subcommand("validate", "Parse a network and report k");
    validate_cmd->add_option("file", path)->required();

    auto *run_cmd = app.add_subcommand("run", "Exact outcome distribution");
    run_cmd->add_option("file", path)->required();
    run_cmd->add_flag("--oracle", with_oracle, "Compare against dense simulation");
    run_cmd->add_option("--format", format)->check(CLI::IsMember({"tsv", "json"}));

    auto *lhv_cmd = app.add_subcommand("lhv", "Build the local model and compare");
    lhv_cmd->add_option("file", path)->required();
    lhv_cmd->add_flag("--pusey", pusey, "Two bits per edge (default)");
    lhv_cmd->add_flag("--trio", trio, "Three independent bits per edge");
    lhv_cmd->add_option("--emit-model", emit_model, "Write the model to a file ('-' for stdout)");

    auto *reduce_cmd = app.add_subcommand("reduce", "Teleportation reduction to a 2-network");
    reduce_cmd->add_option("file", path)->required();
    reduce_cmd->add_option("-o,--output", out)->required();

    auto *verify_cmd = app.add_subcommand("verify-reduction", "Check the post-selected reduction");
    verify_cmd->add_option("file", path)->required();
    verify_cmd->add_option("--format", format)->check(CLI::IsMember({"tsv", "text", "json"}));

    auto *witness_cmd = app.add_subcommand("witness", "Nonlocality witnesses");
    witness_cmd->require_subcommand(1);
    auto *magic_cmd = witness_cmd->add_subcommand("magic-square", "Magic-square line network");
    magic_cmd->add_flag("--bound", bound, "Print the classical bound");
    magic_cmd->add_option("--scoring", scoring)->check(CLI::IsMember({"conditioned", "autowin"}));
    magic_cmd->add_flag("--table", table, "Per-question win table");
    magic_cmd->add_option("--emit-spec", emit_dir, "Write the network files to a directory");

    auto *channel_cmd = app.add_subcommand("check-channel", "Dephasing test for a channel");
    channel_cmd->add_option("file", path)->required();

    auto *gen_cmd = app.add_subcommand("gen-random-network", "Seeded random network");
    gen_cmd->add_option("--kind", kind)->check(CLI::IsMember({"canonical", "bipartite", "hyper", "mixed"}));
    gen_cmd->add_option("--seed", seed);
    gen_cmd->add_option("-o,--output", out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (*validate_cmd) {
            return cmd_validate(path);
        }
        if (*run_cmd) {
            return cmd_run(path, with_oracle, format);
        }
        if (*lhv_cmd) {
            return cmd_lhv(path, trio && !pusey, emit_model);
        }
        if (*reduce_cmd) {
            return cmd_reduce(path, out);
        }
        if (*verify_cmd) {
            return cmd_verify_reduction(path, format);
        }
        if (*magic_cmd) {
            return cmd_witness(bound, scoring, table, emit_dir);
        }
        if (*channel_cmd) {
            return cmd_check_channel(path);
        }
        if (*gen_cmd) {
            return cmd_gen(kind, seed, out);
        }
    } catch (const ParseError &e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const Error &e) {
        std::cerr << e.what() << "\n";
        return e.kind() == ErrorKind::ParseError ? 2 : 1;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
