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

#include "qnet/gf2.hpp"

#include <utility>

namespace qnet::gf2 {

std::size_t rank(Matrix rows) {
    if (rows.empty()) {
        return 0;
    }
    std::size_t num_cols = rows[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < num_cols && r < rows.size(); c++) {
        std::size_t pivot = r;
        while (pivot < rows.size() && !rows[pivot].get(c)) {
            pivot++;
        }
        if (pivot == rows.size()) {
            continue;
        }
        std::swap(rows[r], rows[pivot]);
        for (std::size_t i = r + 1; i < rows.size(); i++) {
            if (rows[i].get(c)) {
                rows[i] ^= rows[r];
            }
        }
        r++;
    }
    return r;
}

std::vector<BitVec> left_kernel(const Matrix &rows, std::size_t num_cols) {
    std::size_t m = rows.size();
    Matrix aug;
    aug.reserve(m);
    for (std::size_t i = 0; i < m; i++) {
        BitVec tag(m);
        tag.set(i, true);
        aug.push_back(rows[i].concat(tag));
    }
    std::size_t r = 0;
    for (std::size_t c = 0; c < num_cols && r < m; c++) {
        std::size_t pivot = r;
        while (pivot < m && !aug[pivot].get(c)) {
            pivot++;
        }
        if (pivot == m) {
            continue;
        }
        std::swap(aug[r], aug[pivot]);
        for (std::size_t i = 0; i < m; i++) {
            if (i != r && aug[i].get(c)) {
                aug[i] ^= aug[r];
            }
        }
        r++;
    }
    std::vector<BitVec> kernel;
    for (std::size_t i = r; i < m; i++) {
        kernel.push_back(aug[i].slice(num_cols, m));
    }
    return kernel;
}

std::vector<BitVec> right_kernel(const Matrix &rows, std::size_t num_cols) {
    Matrix work = rows;
    std::vector<std::size_t> pivot_cols;
    std::size_t r = 0;
    for (std::size_t c = 0; c < num_cols && r < work.size(); c++) {
        std::size_t pivot = r;
        while (pivot < work.size() && !work[pivot].get(c)) {
            pivot++;
        }
        if (pivot == work.size()) {
            continue;
        }
        std::swap(work[r], work[pivot]);
        for (std::size_t i = 0; i < work.size(); i++) {
            if (i != r && work[i].get(c)) {
                work[i] ^= work[r];
            }
        }
        pivot_cols.push_back(c);
        r++;
    }
    std::vector<bool> is_pivot(num_cols, false);
    for (auto c : pivot_cols) {
        is_pivot[c] = true;
    }
    std::vector<BitVec> kernel;
    for (std::size_t f = 0; f < num_cols; f++) {
        if (is_pivot[f]) {
            continue;
        }
        BitVec v(num_cols);
        v.set(f, true);
        for (std::size_t i = 0; i < pivot_cols.size(); i++) {
            if (work[i].get(f)) {
                v.set(pivot_cols[i], true);
            }
        }
        kernel.push_back(std::move(v));
    }
    return kernel;
}

std::optional<BitVec> solve_lexmin(const Matrix &rows, const BitVec &rhs, std::size_t num_cols) {
    std::size_t m = rows.size();
    Matrix aug;
    aug.reserve(m);
    for (std::size_t i = 0; i < m; i++) {
        BitVec b(1);
        b.set(0, rhs.get(i));
        aug.push_back(rows[i].concat(b));
    }
    // Pivots are taken from the highest column down. Each pivot row then only
    // touches free columns below its pivot, so zeroing every free variable
    // yields the lexicographically smallest solution.
    std::vector<std::size_t> pivot_of_row;
    std::size_t r = 0;
    for (std::size_t cc = num_cols; cc-- > 0 && r < m;) {
        std::size_t pivot = r;
        while (pivot < m && !aug[pivot].get(cc)) {
            pivot++;
        }
        if (pivot == m) {
            continue;
        }
        std::swap(aug[r], aug[pivot]);
        for (std::size_t i = 0; i < m; i++) {
            if (i != r && aug[i].get(cc)) {
                aug[i] ^= aug[r];
            }
        }
        pivot_of_row.push_back(cc);
        r++;
    }
    for (std::size_t i = r; i < m; i++) {
        if (aug[i].get(num_cols)) {
            return std::nullopt;
        }
    }
    BitVec solution(num_cols);
    for (std::size_t i = 0; i < r; i++) {
        solution.set(pivot_of_row[i], aug[i].get(num_cols));
    }
    return solution;
}

}  // namespace qnet::gf2
