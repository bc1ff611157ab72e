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

#include "qnet/rational.hpp"

#include <cctype>

#include "qnet/error.hpp"

namespace qnet {

std::string to_string(const Rational &r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

namespace {

BigInt parse_integer(std::string_view text, std::string_view whole) {
    std::size_t i = 0;
    bool negative = false;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
        negative = text[i] == '-';
        i++;
    }
    if (i == text.size()) {
        throw ParseError(0, "bad rational '" + std::string(whole) + "'");
    }
    BigInt value = 0;
    for (; i < text.size(); i++) {
        if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
            throw ParseError(0, "bad rational '" + std::string(whole) + "'");
        }
        value = value * 10 + (text[i] - '0');
    }
    return negative ? BigInt(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_integer(text, text));
    }
    BigInt num = parse_integer(text.substr(0, slash), text);
    BigInt den = parse_integer(text.substr(slash + 1), text);
    if (den == 0) {
        throw ParseError(0, "zero denominator in '" + std::string(text) + "'");
    }
    return Rational(num, den);
}

Rational dyadic(std::size_t k) {
    BigInt den = 1;
    den <<= static_cast<unsigned>(k);
    return Rational(BigInt(1), den);
}

bool is_dyadic(const Rational &r) {
    BigInt den = denominator(r);
    return (den & (den - 1)) == 0;
}

}  // namespace qnet
