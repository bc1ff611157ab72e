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

#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace qnet {

/// Fixed-length bit vector packed into 64-bit words. Bits past `size()` in the
/// last word are always zero, so word-wise comparisons and popcounts are exact.
class BitVec {
   public:
    BitVec() = default;
    explicit BitVec(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {
    }

    static BitVec from_string(const std::string &bits);

    std::size_t size() const noexcept {
        return n_;
    }
    std::size_t num_words() const noexcept {
        return words_.size();
    }

    bool get(std::size_t i) const noexcept {
        return (words_[i >> 6] >> (i & 63)) & 1u;
    }
    void set(std::size_t i, bool v) noexcept {
        std::uint64_t mask = std::uint64_t{1} << (i & 63);
        if (v) {
            words_[i >> 6] |= mask;
        } else {
            words_[i >> 6] &= ~mask;
        }
    }
    void flip(std::size_t i) noexcept {
        words_[i >> 6] ^= std::uint64_t{1} << (i & 63);
    }

    std::uint64_t word(std::size_t w) const noexcept {
        return words_[w];
    }
    std::uint64_t &word(std::size_t w) noexcept {
        return words_[w];
    }

    BitVec &operator^=(const BitVec &other) noexcept {
        for (std::size_t w = 0; w < words_.size(); w++) {
            words_[w] ^= other.words_[w];
        }
        return *this;
    }
    BitVec &operator&=(const BitVec &other) noexcept {
        for (std::size_t w = 0; w < words_.size(); w++) {
            words_[w] &= other.words_[w];
        }
        return *this;
    }
    friend BitVec operator^(BitVec a, const BitVec &b) noexcept {
        a ^= b;
        return a;
    }
    friend BitVec operator&(BitVec a, const BitVec &b) noexcept {
        a &= b;
        return a;
    }

    bool any() const noexcept {
        for (auto w : words_) {
            if (w) {
                return true;
            }
        }
        return false;
    }
    std::size_t popcount() const noexcept {
        std::size_t c = 0;
        for (auto w : words_) {
            c += static_cast<std::size_t>(std::popcount(w));
        }
        return c;
    }
    /// Parity of popcount(a & b).
    friend bool dot(const BitVec &a, const BitVec &b) noexcept {
        std::uint64_t acc = 0;
        for (std::size_t w = 0; w < a.words_.size(); w++) {
            acc ^= a.words_[w] & b.words_[w];
        }
        return std::popcount(acc) & 1;
    }

    /// Copy of bits [start, start + len).
    BitVec slice(std::size_t start, std::size_t len) const;
    /// Concatenation, `this` first.
    BitVec concat(const BitVec &tail) const;

    std::string str() const;

    bool operator==(const BitVec &other) const = default;
    auto operator<=>(const BitVec &other) const = default;

   private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace qnet
