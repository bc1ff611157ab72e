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

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>
#include <string_view>

namespace qnet {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// "num/den" in lowest terms; integers still print with "/1".
std::string to_string(const Rational &r);

/// Accepts "num/den" or a bare integer. Throws ParseError (line 0) on junk.
Rational parse_rational(std::string_view text);

/// 2^{-k} as an exact rational.
Rational dyadic(std::size_t k);

bool is_dyadic(const Rational &r);

}  // namespace qnet
