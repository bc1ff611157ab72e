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

#include "qnet/distribution.hpp"

#include <cmath>
#include <set>

#include "qnet/error.hpp"

namespace qnet {

OutcomeDistribution::OutcomeDistribution(std::vector<Segment> layout) : layout_(std::move(layout)) {
    for (const auto &s : layout_) {
        key_length_ += s.width;
    }
}

OutcomeDistribution OutcomeDistribution::flat(std::size_t width) {
    return OutcomeDistribution({Segment{"", width}});
}

std::size_t OutcomeDistribution::segment_offset(std::size_t i) const {
    std::size_t off = 0;
    for (std::size_t k = 0; k < i; k++) {
        off += layout_.at(k).width;
    }
    return off;
}

void OutcomeDistribution::add(const std::string &key, const Rational &p) {
    if (key.size() != key_length_) {
        throw Error(ErrorKind::ShapeMismatch,
                    "key '" + key + "' has length " + std::to_string(key.size()) + ", expected " +
                        std::to_string(key_length_));
    }
    if (p == 0) {
        return;
    }
    auto [it, inserted] = entries_.try_emplace(key, p);
    if (!inserted) {
        it->second += p;
        if (it->second == 0) {
            entries_.erase(it);
        }
    }
}

Rational OutcomeDistribution::probability(const std::string &key) const {
    auto it = entries_.find(key);
    return it == entries_.end() ? Rational(0) : it->second;
}

Rational OutcomeDistribution::total() const {
    Rational t = 0;
    for (const auto &[k, p] : entries_) {
        t += p;
    }
    return t;
}

bool OutcomeDistribution::binary() const {
    for (const auto &[k, p] : entries_) {
        for (char c : k) {
            if (c != '0' && c != '1') {
                return false;
            }
        }
    }
    return true;
}

std::pair<OutcomeDistribution, Rational> condition(const OutcomeDistribution &d,
                                                   const std::vector<std::size_t> &positions,
                                                   const std::string &values) {
    if (positions.size() != values.size()) {
        throw Error(ErrorKind::ShapeMismatch, "positions and values differ in length");
    }
    for (auto pos : positions) {
        if (pos >= d.key_length()) {
            throw Error(ErrorKind::IndexOutOfRange,
                        "position " + std::to_string(pos) + " outside key length " + std::to_string(d.key_length()));
        }
    }
    Rational event = 0;
    for (const auto &[key, p] : d.entries()) {
        bool match = true;
        for (std::size_t i = 0; i < positions.size() && match; i++) {
            match = key[positions[i]] == values[i];
        }
        if (match) {
            event += p;
        }
    }
    if (event == 0) {
        throw Error(ErrorKind::ZeroProbabilityEvent, "conditioning event has probability zero");
    }
    OutcomeDistribution out(d.layout());
    for (const auto &[key, p] : d.entries()) {
        bool match = true;
        for (std::size_t i = 0; i < positions.size() && match; i++) {
            match = key[positions[i]] == values[i];
        }
        if (match) {
            out.add(key, p / event);
        }
    }
    return {std::move(out), event};
}

OutcomeDistribution marginal(const OutcomeDistribution &d, const std::vector<std::size_t> &positions) {
    OutcomeDistribution out = OutcomeDistribution::flat(positions.size());
    for (const auto &[key, p] : d.entries()) {
        std::string sub;
        sub.reserve(positions.size());
        for (auto pos : positions) {
            sub.push_back(key.at(pos));
        }
        out.add(sub, p);
    }
    return out;
}

OutcomeDistribution product(const OutcomeDistribution &a, const OutcomeDistribution &b) {
    std::vector<Segment> layout = a.layout();
    layout.insert(layout.end(), b.layout().begin(), b.layout().end());
    OutcomeDistribution out(std::move(layout));
    for (const auto &[ka, pa] : a.entries()) {
        for (const auto &[kb, pb] : b.entries()) {
            out.add(ka + kb, pa * pb);
        }
    }
    return out;
}

OutcomeDistribution z_distribution(const StabilizerTableau &t) {
    AffineSubspace support = z_support(t);
    OutcomeDistribution out = OutcomeDistribution::flat(t.num_qubits());
    Rational p = dyadic(support.dimension());
    support.for_each_point([&](const BitVec &b) { out.add(b.str(), p); });
    return out;
}

double total_variation(const OutcomeDistribution &exact, const std::map<std::string, double> &approx) {
    std::set<std::string> keys;
    for (const auto &[k, p] : exact.entries()) {
        keys.insert(k);
    }
    for (const auto &[k, p] : approx) {
        keys.insert(k);
    }
    double tv = 0;
    for (const auto &k : keys) {
        double e = exact.probability(k).convert_to<double>();
        auto it = approx.find(k);
        double a = it == approx.end() ? 0.0 : it->second;
        tv += std::abs(e - a);
    }
    return tv / 2;
}

}  // namespace qnet
