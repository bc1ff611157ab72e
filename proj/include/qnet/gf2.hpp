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
#include <optional>
#include <vector>

#include "qnet/bitvec.hpp"

namespace qnet::gf2 {

/// Rows of equal length; the row count is arbitrary.
using Matrix = std::vector<BitVec>;

std::size_t rank(Matrix rows);

/// Basis of the left kernel: every returned vector c (one bit per input row)
/// satisfies XOR_{i : c_i = 1} rows[i] == 0, and the returned set spans all
/// such combinations.
std::vector<BitVec> left_kernel(const Matrix &rows, std::size_t num_cols);

/// Basis of the right kernel {v : rows[i] . v = 0 for all i}.
std::vector<BitVec> right_kernel(const Matrix &rows, std::size_t num_cols);

/// Solves rows[i] . v = rhs[i] for all i. Among all solutions returns the
/// lexicographically smallest, reading bit 0 as most significant. Returns
/// nullopt when the system is inconsistent.
std::optional<BitVec> solve_lexmin(const Matrix &rows, const BitVec &rhs, std::size_t num_cols);

}  // namespace qnet::gf2
