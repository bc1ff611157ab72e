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

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qnet/rational.hpp"
#include "qnet/stabilizer.hpp"

namespace qnet {

/// One party's slice of every outcome key.
struct Segment {
    std::string party;
    std::size_t width = 0;

    bool operator==(const Segment &) const = default;
};

/// Exact probability map over outcome strings. A key is the concatenation of
/// each party's segment in layout order; characters are outcome bits ('0' or
/// '1') or classical label symbols. Entries with zero probability are never
/// stored.
class OutcomeDistribution {
   public:
    OutcomeDistribution() = default;
    explicit OutcomeDistribution(std::vector<Segment> layout);

    /// Single anonymous segment of the given width.
    static OutcomeDistribution flat(std::size_t width);

    const std::vector<Segment> &layout() const noexcept {
        return layout_;
    }
    std::size_t key_length() const noexcept {
        return key_length_;
    }
    /// Offset of segment `i` within a key.
    std::size_t segment_offset(std::size_t i) const;

    /// Adds `p` to the probability of `key`. Throws ShapeMismatch on a key of
    /// the wrong length.
    void add(const std::string &key, const Rational &p);
    Rational probability(const std::string &key) const;

    const std::map<std::string, Rational> &entries() const noexcept {
        return entries_;
    }
    std::size_t support_size() const noexcept {
        return entries_.size();
    }
    Rational total() const;
    bool binary() const;

    /// Same layout, exact key-by-key comparison.
    bool operator==(const OutcomeDistribution &other) const = default;

   private:
    std::vector<Segment> layout_;
    std::size_t key_length_ = 0;
    std::map<std::string, Rational> entries_;
};

/// Conditional distribution given key[positions[i]] == values[i], and the
/// probability of that event. Throws ZeroProbabilityEvent.
std::pair<OutcomeDistribution, Rational> condition(const OutcomeDistribution &d,
                                                   const std::vector<std::size_t> &positions,
                                                   const std::string &values);

/// Marginal on the listed positions, in that order, as a flat distribution.
OutcomeDistribution marginal(const OutcomeDistribution &d, const std::vector<std::size_t> &positions);

/// Product distribution; `a`'s segments come first.
OutcomeDistribution product(const OutcomeDistribution &a, const OutcomeDistribution &b);

/// Computational-basis measurement of every qubit: uniform over z_support(t).
OutcomeDistribution z_distribution(const StabilizerTableau &t);

/// Total-variation distance to a floating-point distribution over the same keys.
double total_variation(const OutcomeDistribution &exact, const std::map<std::string, double> &approx);

}  // namespace qnet
