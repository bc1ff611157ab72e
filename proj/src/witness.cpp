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

#include "qnet/witness.hpp"

#include <algorithm>

#include "qnet/error.hpp"
#include "qnet/stabilizer.hpp"

namespace qnet::witness {

namespace {

// Vertex layout: A1=0 B1=1 A2=2 B2=3, Alice's register 4,5, Bob's 6,7.
constexpr std::size_t kA1 = 0, kB1 = 1, kA2 = 2, kB2 = 3, kAR = 4, kBR = 6;

char sign_bit(int s) {
    return s > 0 ? '0' : '1';
}

BellBits bits_from(const std::string &raw, std::size_t t0, std::size_t t1, std::size_t s0, std::size_t s1) {
    return {raw[s0] == '1', raw[t0] == '1', raw[s1] == '1', raw[t1] == '1'};
}

struct KeyPositions {
    std::size_t x, alice, y, bob;
};

KeyPositions positions_for(const OutcomeDistribution &d) {
    static const std::vector<Segment> expected = magic_square_spec().outcome_layout();
    if (d.layout() != expected) {
        throw Error(ErrorKind::ShapeMismatch, "distribution does not have the magic-square layout");
    }
    // Segments: X(label), A(3 answers + label), B(answer + label), Y(label).
    return KeyPositions{d.segment_offset(0), d.segment_offset(1), d.segment_offset(3), d.segment_offset(2)};
}

}  // namespace

MagicSquareGrid::MagicSquareGrid() {
    const char *literals[9] = {"+IZ", "+ZI", "+ZZ", "+XI", "+IX", "+XX", "-XZ", "-ZX", "+YY"};
    for (std::size_t i = 0; i < 9; i++) {
        cells_[i] = PauliOperator::parse(literals[i]);
    }
    for (std::size_t r = 0; r < 3; r++) {
        contexts_[r] = Context{{3 * r, 3 * r + 1, 3 * r + 2}, +1};
        contexts_[3 + r] = Context{{r, r + 3, r + 6}, -1};
    }
    PauliOperator id(2);
    for (const auto &c : contexts_) {
        PauliOperator prod = id;
        for (std::size_t i = 0; i < 3; i++) {
            for (std::size_t j = i + 1; j < 3; j++) {
                if (!commutes(cells_[c.cells[i]], cells_[c.cells[j]])) {
                    throw Error(ErrorKind::NonCommuting, "grid context is not commuting");
                }
            }
            prod = multiply(prod, cells_[c.cells[i]]);
        }
        if (prod != (c.sign > 0 ? id : id.negated())) {
            throw Error(ErrorKind::Infeasible, "grid context product is " + prod.str());
        }
    }
}

const MagicSquareGrid &MagicSquareGrid::standard() {
    static const MagicSquareGrid grid;
    return grid;
}

bool MagicSquareGrid::contains(std::size_t x, std::size_t y) const {
    const auto &c = context(x).cells;
    return std::find(c.begin(), c.end(), y) != c.end();
}

std::size_t MagicSquareGrid::position(std::size_t x, std::size_t y) const {
    const auto &c = context(x).cells;
    auto it = std::find(c.begin(), c.end(), y);
    if (it == c.end()) {
        throw Error(ErrorKind::IndexOutOfRange, "cell not in context");
    }
    return static_cast<std::size_t>(it - c.begin());
}

PureSource MagicSquareGrid::representative(std::size_t x) const {
    const auto &c = context(x);
    return PureSource::from_generators({cells_[c.cells[0]], cells_[c.cells[1]]});
}

PauliOperator MagicSquareGrid::auxiliary(std::size_t y) const {
    const char order[4] = {'I', 'X', 'Y', 'Z'};
    const PauliOperator &g = cell(y);
    for (char a : order) {
        for (char b : order) {
            PauliOperator h = PauliOperator::parse(std::string("+") + a + b);
            if (h == PauliOperator(2) || h == g.bare() || !commutes(h, g)) {
                continue;
            }
            return h;
        }
    }
    throw Error(ErrorKind::Infeasible, "no auxiliary operator");
}

PauliOperator correction(const BellBits &bits) {
    PauliOperator p(2);
    for (std::size_t j = 0; j < 2; j++) {
        if (bits[2 * j + 1]) {
            p *= PauliOperator::single(2, j, 'X');
        }
        if (bits[2 * j]) {
            p *= PauliOperator::single(2, j, 'Z');
        }
    }
    return p;
}

std::array<int, 3> alice_answer(std::size_t x, const BellBits &bits) {
    const auto &grid = MagicSquareGrid::standard();
    CliffordCircuit fix;
    for (std::size_t j = 0; j < 2; j++) {
        if (bits[2 * j + 1]) {
            fix.x(j);
        }
        if (bits[2 * j]) {
            fix.z(j);
        }
    }
    StabilizerTableau t = apply_circuit(grid.representative(x).tableau(), fix);
    std::array<int, 3> out{};
    for (std::size_t i = 0; i < 3; i++) {
        Membership m = membership(t, grid.cell(grid.context(x).cells[i]));
        if (m == Membership::NonMember) {
            throw Error(ErrorKind::Infeasible, "corrected state left the context basis");
        }
        out[i] = m == Membership::PlusMember ? 1 : -1;
    }
    return out;
}

int bob_answer(std::size_t y, const BellBits &bits, std::size_t component) {
    if (component > 1) {
        throw Error(ErrorKind::IndexOutOfRange, "component must be 0 or 1");
    }
    return commutes(correction(bits), MagicSquareGrid::standard().cell(y)) ? 1 : -1;
}

NetworkSpec magic_square_spec() {
    const auto &grid = MagicSquareGrid::standard();
    NetworkSpec spec;
    spec.num_vertices = 8;
    const std::vector<std::string> bell = {"+XX", "+ZZ"};
    spec.edges.push_back(Edge{"AB1", {kA1, kB1}, Source::pure(PureSource::from_literals(bell))});
    spec.edges.push_back(Edge{"AB2", {kA2, kB2}, Source::pure(PureSource::from_literals(bell))});

    std::vector<Component> xa;
    for (std::size_t x = 0; x < 6; x++) {
        std::string sym(1, static_cast<char>('1' + x));
        xa.push_back(Component{Rational(1, 6), grid.representative(x), {Label{"X", sym}, Label{"A", sym}}});
    }
    spec.edges.push_back(Edge{"XA", {kAR, kAR + 1}, Source::mixture(std::move(xa))});

    std::vector<Component> yb;
    for (std::size_t y = 0; y < 9; y++) {
        std::string sym(1, static_cast<char>('1' + y));
        PauliOperator h = grid.auxiliary(y);
        for (int branch = 0; branch < 2; branch++) {
            PureSource st = PureSource::from_generators({grid.cell(y), branch == 0 ? h : h.negated()});
            yb.push_back(Component{Rational(1, 18), st, {Label{"Y", sym}, Label{"B", sym}}});
        }
    }
    spec.edges.push_back(Edge{"YB", {kBR, kBR + 1}, Source::mixture(std::move(yb))});

    // Raw bits per party are in ascending vertex order: (t0, t1, s0, s1).
    PostTable alice{"alice.post", {}};
    PostTable bob{"bob.post", {}};
    for (unsigned m = 0; m < 16; m++) {
        std::string raw(4, '0');
        for (std::size_t i = 0; i < 4; i++) {
            raw[i] = (m >> i) & 1 ? '1' : '0';
        }
        BellBits bits = bits_from(raw, 0, 1, 2, 3);
        for (std::size_t x = 0; x < 6; x++) {
            auto a = alice_answer(x, bits);
            alice.entries[raw + static_cast<char>('1' + x)] =
                std::string{sign_bit(a[0]), sign_bit(a[1]), sign_bit(a[2])};
        }
        for (std::size_t y = 0; y < 9; y++) {
            bob.entries[raw + static_cast<char>('1' + y)] = std::string(1, sign_bit(bob_answer(y, bits)));
        }
    }

    CliffordCircuit ca, cb;
    ca.cx(kAR, kA1).h(kAR).cx(kAR + 1, kA2).h(kAR + 1);
    cb.cx(kBR, kB1).h(kBR).cx(kBR + 1, kB2).h(kBR + 1);
    spec.parties.push_back(Party{"X", {}, 0, {}, std::nullopt});
    spec.parties.push_back(Party{"A", {kA1, kA2, kAR, kAR + 1}, 0, ca, alice});
    spec.parties.push_back(Party{"B", {kB1, kB2, kBR, kBR + 1}, 0, cb, bob});
    spec.parties.push_back(Party{"Y", {}, 0, {}, std::nullopt});
    return spec;
}

namespace {

struct Round {
    std::size_t x, y;
    bool win;
};

Round score_key(const std::string &key, const KeyPositions &at) {
    const auto &grid = MagicSquareGrid::standard();
    std::size_t x = static_cast<std::size_t>(key[at.x] - '1');
    std::size_t y = static_cast<std::size_t>(key[at.y] - '1');
    if (x >= 6 || y >= 9) {
        throw Error(ErrorKind::ShapeMismatch, "bad question label in " + key);
    }
    int prod = 1;
    std::array<int, 3> a{};
    for (std::size_t i = 0; i < 3; i++) {
        a[i] = key[at.alice + i] == '0' ? 1 : -1;
        prod *= a[i];
    }
    int b = key[at.bob] == '0' ? 1 : -1;
    bool win = prod == grid.context(x).sign;
    if (grid.contains(x, y)) {
        win = win && a[grid.position(x, y)] == b;
    }
    return Round{x, y, win};
}

}  // namespace

Rational winning_probability(const OutcomeDistribution &d, Scoring scoring) {
    KeyPositions at = positions_for(d);
    const auto &grid = MagicSquareGrid::standard();
    Rational won = 0, relevant = 0;
    for (const auto &[key, p] : d.entries()) {
        Round r = score_key(key, at);
        bool inside = grid.contains(r.x, r.y);
        if (scoring == Scoring::AutoWin) {
            if (!inside || r.win) {
                won += p;
            }
            continue;
        }
        if (inside) {
            relevant += p;
            if (r.win) {
                won += p;
            }
        }
    }
    if (scoring == Scoring::AutoWin) {
        return won;
    }
    if (relevant == 0) {
        throw Error(ErrorKind::ZeroProbabilityEvent, "no question pair with the cell in the context");
    }
    return won / relevant;
}

std::vector<std::array<Rational, 9>> score_table(const OutcomeDistribution &d) {
    KeyPositions at = positions_for(d);
    std::vector<std::array<Rational, 9>> won(6), total(6);
    for (const auto &[key, p] : d.entries()) {
        Round r = score_key(key, at);
        total[r.x][r.y] += p;
        if (r.win) {
            won[r.x][r.y] += p;
        }
    }
    const auto &grid = MagicSquareGrid::standard();
    for (std::size_t x = 0; x < 6; x++) {
        for (std::size_t y = 0; y < 9; y++) {
            won[x][y] = grid.contains(x, y) && total[x][y] != 0 ? Rational(won[x][y] / total[x][y]) : Rational(0);
        }
    }
    return won;
}

OutcomeDistribution strategy_distribution(const std::array<std::array<int, 3>, 6> &alice,
                                          const std::array<int, 9> &bob) {
    OutcomeDistribution d(magic_square_spec().outcome_layout());
    KeyPositions at = positions_for(d);
    for (std::size_t x = 0; x < 6; x++) {
        for (std::size_t y = 0; y < 9; y++) {
            std::string key(d.key_length(), '0');
            char xs = static_cast<char>('1' + x), ys = static_cast<char>('1' + y);
            key[at.x] = xs;
            key[at.alice + 3] = xs;
            key[at.y] = ys;
            key[at.bob + 1] = ys;
            for (std::size_t i = 0; i < 3; i++) {
                key[at.alice + i] = sign_bit(alice[x][i]);
            }
            key[at.bob] = sign_bit(bob[y]);
            d.add(key, Rational(1, 54));
        }
    }
    return d;
}

Rational classical_bound(bool constant_bob) {
    const auto &grid = MagicSquareGrid::standard();
    // Per context, the four sign triples with the required product.
    std::array<std::array<std::array<int, 3>, 4>, 6> triples{};
    for (std::size_t x = 0; x < 6; x++) {
        std::size_t k = 0;
        for (unsigned m = 0; m < 8; m++) {
            std::array<int, 3> t{m & 1 ? -1 : 1, m & 2 ? -1 : 1, m & 4 ? -1 : 1};
            if (t[0] * t[1] * t[2] == grid.context(x).sign) {
                triples[x][k++] = t;
            }
        }
    }
    int best = 0;
    for (unsigned bm = 0; bm < 512; bm++) {
        if (constant_bob && bm != 0 && bm != 511) {
            continue;
        }
        // score[x][k]: cells of context x where triple k agrees with Bob.
        std::array<std::array<int, 4>, 6> score{};
        for (std::size_t x = 0; x < 6; x++) {
            for (std::size_t k = 0; k < 4; k++) {
                for (std::size_t i = 0; i < 3; i++) {
                    int b = (bm >> grid.context(x).cells[i]) & 1 ? -1 : 1;
                    score[x][k] += triples[x][k][i] == b;
                }
            }
        }
        for (unsigned am = 0; am < 4096; am++) {
            int wins = 0;
            for (std::size_t x = 0; x < 6; x++) {
                wins += score[x][(am >> (2 * x)) & 3];
            }
            best = std::max(best, wins);
        }
    }
    return Rational(best, 18);
}

}  // namespace qnet::witness
