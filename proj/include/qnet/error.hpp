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
#include <stdexcept>
#include <string>

namespace qnet {

/// Every failure the library reports carries one of these kinds. The CLI maps
/// `ParseError` to exit code 2 and everything else to exit code 1.
enum class ErrorKind {
    DimensionError,
    IndexOutOfRange,
    NonCommuting,
    Dependent,
    ImaginarySign,
    WrongCount,
    OverlappingEdges,
    OverlappingParties,
    UncoveredVertex,
    CircuitOutOfScope,
    BadWeights,
    BadLabels,
    MissingPostEntry,
    ZeroProbabilityEvent,
    ShapeMismatch,
    NotCanonical,
    Infeasible,
    EnumerationTooLarge,
    TooLong,
    NotTwoNetwork,
    MixedSourcePresent,
    BadPartition,
    TooManyQubits,
    NotTracePreserving,
    NotCompletelyPositive,
    ParseError,
};

const char *error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, const std::string &detail);

    ErrorKind kind() const noexcept {
        return kind_;
    }
    const std::string &detail() const noexcept {
        return detail_;
    }

   private:
    ErrorKind kind_;
    std::string detail_;
};

/// Parse failures remember the 1-based line they happened on.
class ParseError : public Error {
   public:
    ParseError(std::size_t line, const std::string &detail);

    std::size_t line() const noexcept {
        return line_;
    }

   private:
    std::size_t line_;
};

}  // namespace qnet
