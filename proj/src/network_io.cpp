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

#include "qnet/network_io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <vector>

#include "qnet/error.hpp"

namespace qnet {

namespace {

std::string trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) {
        b++;
    }
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) {
        e--;
    }
    return std::string(s.substr(b, e - b));
}

struct Line {
    std::size_t number;
    std::string text;
};

std::vector<Line> significant_lines(std::string_view text) {
    std::vector<Line> out;
    std::size_t number = 0, start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        number++;
        std::string_view raw = text.substr(start, end - start);
        auto hash = raw.find('#');
        if (hash != std::string_view::npos) {
            raw = raw.substr(0, hash);
        }
        std::string t = trim(raw);
        if (!t.empty()) {
            out.push_back(Line{number, t});
        }
        if (end == text.size()) {
            break;
        }
        start = end + 1;
    }
    return out;
}

/// Splits on whitespace, keeping double-quoted tokens (without quotes) intact.
std::vector<std::string> tokenize(const Line &line) {
    std::vector<std::string> toks;
    const std::string &s = line.text;
    std::size_t i = 0;
    while (i < s.size()) {
        if (std::isspace(static_cast<unsigned char>(s[i]))) {
            i++;
            continue;
        }
        if (s[i] == '"') {
            auto close = s.find('"', i + 1);
            if (close == std::string::npos) {
                throw ParseError(line.number, "unterminated quote");
            }
            toks.push_back(s.substr(i, close - i + 1));
            i = close + 1;
            continue;
        }
        std::size_t j = i;
        while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) {
            j++;
        }
        toks.push_back(s.substr(i, j - i));
        i = j;
    }
    return toks;
}

std::string unquote(const std::string &tok, std::size_t line) {
    if (tok.size() < 2 || tok.front() != '"' || tok.back() != '"') {
        throw ParseError(line, "expected a quoted Pauli literal, got '" + tok + "'");
    }
    return tok.substr(1, tok.size() - 2);
}

std::size_t parse_count(const std::string &s, std::size_t line, const char *what) {
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); })) {
        throw ParseError(line, std::string("bad ") + what + " '" + s + "'");
    }
    return static_cast<std::size_t>(std::stoull(s));
}

std::vector<std::size_t> parse_list(const std::string &s, std::size_t line) {
    std::vector<std::size_t> out;
    if (s.empty()) {
        return out;
    }
    std::size_t start = 0;
    while (true) {
        auto comma = s.find(',', start);
        out.push_back(parse_count(s.substr(start, comma - start), line, "vertex index"));
        if (comma == std::string::npos) {
            break;
        }
        start = comma + 1;
    }
    return out;
}

std::string expect_key(const std::string &tok, const std::string &key, std::size_t line) {
    if (tok.rfind(key + "=", 0) != 0) {
        throw ParseError(line, "expected '" + key + "=...', got '" + tok + "'");
    }
    return tok.substr(key.size() + 1);
}

std::string join_list(const std::vector<std::size_t> &v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); i++) {
        if (i) {
            s += ",";
        }
        s += std::to_string(v[i]);
    }
    return s;
}

template <typename F>
auto at_line(std::size_t line, F &&f) -> decltype(f()) {
    try {
        return f();
    } catch (const ParseError &e) {
        if (e.line() != 0) {
            throw;
        }
        throw ParseError(line, e.detail());
    }
}

/// Parses "gens ..." or "prep ..." starting at toks[i]; stops at `label`.
PureSource parse_state(const std::vector<std::string> &toks, std::size_t &i, std::size_t width, std::size_t line) {
    if (i >= toks.size()) {
        throw ParseError(line, "expected 'gens' or 'prep'");
    }
    const std::string kind = toks[i++];
    if (kind == "gens") {
        std::vector<PauliOperator> gens;
        while (i < toks.size() && toks[i] != "label") {
            std::string lit = unquote(toks[i++], line);
            gens.push_back(at_line(line, [&] { return PauliOperator::parse(lit); }));
        }
        PureSource s = PureSource::from_generators(std::move(gens));
        s.width = width;
        return s;
    }
    if (kind == "prep") {
        std::string body;
        while (i < toks.size() && toks[i] != "label") {
            if (!body.empty()) {
                body += " ";
            }
            body += toks[i++];
        }
        CliffordCircuit c = at_line(line, [&] { return CliffordCircuit::parse(body); });
        return PureSource::from_preparation(width, std::move(c));
    }
    throw ParseError(line, "expected 'gens' or 'prep', got '" + kind + "'");
}

std::string print_state(const PureSource &s) {
    if (s.form == PureSource::Form::Preparation) {
        std::string c = s.preparation.str();
        return c.empty() ? "prep" : "prep " + c;
    }
    std::string out = "gens";
    for (const auto &g : s.generators) {
        out += " \"" + g.str() + "\"";
    }
    return out;
}

std::string read_file(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError(0, "cannot open '" + path.string() + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

std::map<std::string, std::string> parse_post_table(std::string_view text) {
    std::map<std::string, std::string> entries;
    for (const Line &line : significant_lines(text)) {
        auto toks = tokenize(line);
        if (toks.size() != 2) {
            throw ParseError(line.number, "post table lines need '<input> <output>'");
        }
        if (!entries.emplace(toks[0], toks[1]).second) {
            throw ParseError(line.number, "duplicate post input '" + toks[0] + "'");
        }
    }
    return entries;
}

std::string print_post_table(const PostTable &table) {
    std::string out;
    for (const auto &[in, o] : table.entries) {
        out += in + " " + o + "\n";
    }
    return out;
}

NetworkSpec parse_network(std::string_view text, const std::filesystem::path &base_dir) {
    auto lines = significant_lines(text);
    NetworkSpec spec;
    if (lines.empty()) {
        throw ParseError(1, "expected 'qubits N'");
    }
    {
        auto toks = tokenize(lines[0]);
        if (toks.size() != 2 || toks[0] != "qubits") {
            throw ParseError(lines[0].number, "expected 'qubits N'");
        }
        spec.num_vertices = parse_count(toks[1], lines[0].number, "qubit count");
    }

    std::size_t i = 1;
    while (i < lines.size()) {
        const Line &line = lines[i];
        auto toks = tokenize(line);
        if (toks[0] == "edge") {
            if (toks.size() != 3) {
                throw ParseError(line.number, "expected 'edge <name> vertices=<list>'");
            }
            Edge e;
            e.name = toks[1];
            e.vertices = parse_list(expect_key(toks[2], "vertices", line.number), line.number);
            i++;
            if (i >= lines.size()) {
                throw ParseError(line.number, "edge '" + e.name + "' has no source");
            }
            const Line &body = lines[i];
            auto btoks = tokenize(body);
            if (btoks[0] == "mixed") {
                if (btoks.size() != 1) {
                    throw ParseError(body.number, "'mixed' takes no arguments");
                }
                std::vector<Component> comps;
                i++;
                while (true) {
                    if (i >= lines.size()) {
                        throw ParseError(body.number, "mixed block of edge '" + e.name + "' lacks 'end'");
                    }
                    const Line &cl = lines[i];
                    auto ctoks = tokenize(cl);
                    if (ctoks[0] == "end") {
                        if (ctoks.size() != 1) {
                            throw ParseError(cl.number, "'end' takes no arguments");
                        }
                        i++;
                        break;
                    }
                    if (ctoks[0] != "component" || ctoks.size() < 3) {
                        throw ParseError(cl.number, "expected 'component weight=<p>/<q> ...' or 'end'");
                    }
                    Component c;
                    std::string w = expect_key(ctoks[1], "weight", cl.number);
                    c.weight = at_line(cl.number, [&] { return parse_rational(w); });
                    std::size_t j = 2;
                    c.state = parse_state(ctoks, j, e.vertices.size(), cl.number);
                    while (j < ctoks.size()) {
                        if (ctoks[j] != "label" || j + 1 >= ctoks.size()) {
                            throw ParseError(cl.number, "expected 'label <party>=<symbols>'");
                        }
                        const std::string &lab = ctoks[j + 1];
                        auto eq = lab.find('=');
                        if (eq == std::string::npos || eq == 0 || eq + 1 == lab.size()) {
                            throw ParseError(cl.number, "bad label '" + lab + "'");
                        }
                        c.labels.push_back(Label{lab.substr(0, eq), lab.substr(eq + 1)});
                        j += 2;
                    }
                    comps.push_back(std::move(c));
                    i++;
                }
                e.source = Source::mixture(std::move(comps));
            } else {
                std::size_t j = 0;
                PureSource s = parse_state(btoks, j, e.vertices.size(), body.number);
                if (j != btoks.size()) {
                    throw ParseError(body.number, "labels are only allowed on mixture components");
                }
                e.source = Source::pure(std::move(s));
                i++;
            }
            spec.edges.push_back(std::move(e));
        } else if (toks[0] == "party") {
            if (toks.size() != 4) {
                throw ParseError(line.number, "expected 'party <name> vertices=<list> ancillas=<m>'");
            }
            Party p;
            p.name = toks[1];
            p.vertices = parse_list(expect_key(toks[2], "vertices", line.number), line.number);
            std::sort(p.vertices.begin(), p.vertices.end());
            p.ancillas = parse_count(expect_key(toks[3], "ancillas", line.number), line.number, "ancilla count");
            i++;
            while (i < lines.size()) {
                const Line &pl = lines[i];
                std::string head = pl.text.substr(0, pl.text.find_first_of(" \t"));
                if (head == "circuit") {
                    std::string body = trim(std::string_view(pl.text).substr(head.size()));
                    p.circuit = at_line(pl.number, [&] { return CliffordCircuit::parse(body); });
                } else if (head == "post") {
                    std::string file = trim(std::string_view(pl.text).substr(head.size()));
                    if (file.empty()) {
                        throw ParseError(pl.number, "expected 'post <table file>'");
                    }
                    PostTable t;
                    t.path = file;
                    std::filesystem::path full = std::filesystem::path(file).is_absolute() ? std::filesystem::path(file) : base_dir / file;
                    t.entries = at_line(pl.number, [&] { return parse_post_table(read_file(full)); });
                    p.post = std::move(t);
                } else {
                    break;
                }
                i++;
            }
            spec.parties.push_back(std::move(p));
        } else {
            throw ParseError(line.number, "unexpected '" + toks[0] + "'");
        }
    }
    return spec;
}

NetworkSpec read_network(const std::filesystem::path &path) {
    return parse_network(read_file(path), path.parent_path());
}

std::string print_network(const NetworkSpec &spec) {
    std::ostringstream out;
    out << "qubits " << spec.num_vertices << "\n";
    for (const auto &e : spec.edges) {
        out << "edge " << e.name << " vertices=" << join_list(e.vertices) << "\n";
        if (e.source.mixed) {
            out << "  mixed\n";
            for (const auto &c : e.source.components) {
                out << "    component weight=" << to_string(c.weight) << " " << print_state(c.state);
                for (const auto &l : c.labels) {
                    out << " label " << l.party << "=" << l.symbols;
                }
                out << "\n";
            }
            out << "  end\n";
        } else {
            out << "  " << print_state(e.source.components.at(0).state) << "\n";
        }
    }
    for (const auto &p : spec.parties) {
        out << "party " << p.name << " vertices=" << join_list(p.vertices) << " ancillas=" << p.ancillas << "\n";
        if (!p.circuit.empty()) {
            out << "  circuit " << p.circuit.str() << "\n";
        }
        if (p.post) {
            out << "  post " << p.post->path << "\n";
        }
    }
    return out.str();
}

void write_network(NetworkSpec spec, const std::filesystem::path &path) {
    auto dir = path.parent_path();
    if (!dir.empty()) {
        std::filesystem::create_directories(dir);
    }
    for (auto &p : spec.parties) {
        if (!p.post) {
            continue;
        }
        if (p.post->path.empty()) {
            p.post->path = p.name + ".post";
        }
        std::filesystem::path full =
            std::filesystem::path(p.post->path).is_absolute() ? std::filesystem::path(p.post->path) : dir / p.post->path;
        std::ofstream t(full);
        t << print_post_table(*p.post);
        if (!t) {
            throw Error(ErrorKind::ParseError, "cannot write '" + full.string() + "'");
        }
    }
    std::ofstream f(path);
    f << print_network(spec);
    if (!f) {
        throw Error(ErrorKind::ParseError, "cannot write '" + path.string() + "'");
    }
}

}  // namespace qnet
