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

#include "qnet/bitvec.hpp"

#include <stdexcept>

namespace qnet {

BitVec BitVec::from_string(const std::string &bits) {
    BitVec v(bits.size());
    for (std::size_t i = 0; i < bits.size(); i++) {
        if (bits[i] == '1') {
            v.set(i, true);
        } else if (bits[i] != '0') {
            throw std::invalid_argument("bit string may only contain 0 and 1: " + bits);
        }
    }
    return v;
}

BitVec BitVec::slice(std::size_t start, std::size_t len) const {
    BitVec out(len);
    for (std::size_t i = 0; i < len; i++) {
        out.set(i, get(start + i));
    }
    return out;
}

BitVec BitVec::concat(const BitVec &tail) const {
    BitVec out(n_ + tail.n_);
    out.words_.assign(out.words_.size(), 0);
    for (std::size_t w = 0; w < words_.size(); w++) {
        out.words_[w] = words_[w];
    }
    // Tail is shifted bit by bit when the head does not end on a word boundary.
    if ((n_ & 63) == 0) {
        for (std::size_t w = 0; w < tail.words_.size(); w++) {
            out.words_[(n_ >> 6) + w] = tail.words_[w];
        }
    } else {
        for (std::size_t i = 0; i < tail.n_; i++) {
            if (tail.get(i)) {
                out.set(n_ + i, true);
            }
        }
    }
    return out;
}

std::string BitVec::str() const {
    std::string s(n_, '0');
    for (std::size_t i = 0; i < n_; i++) {
        if (get(i)) {
            s[i] = '1';
        }
    }
    return s;
}

}  // namespace qnet
