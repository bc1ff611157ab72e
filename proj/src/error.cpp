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

#include "qnet/error.hpp"

namespace qnet {

const char *error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::DimensionError:
            return "DimensionError";
        case ErrorKind::IndexOutOfRange:
            return "IndexOutOfRange";
        case ErrorKind::NonCommuting:
            return "NonCommuting";
        case ErrorKind::Dependent:
            return "Dependent";
        case ErrorKind::ImaginarySign:
            return "ImaginarySign";
        case ErrorKind::WrongCount:
            return "WrongCount";
        case ErrorKind::OverlappingEdges:
            return "OverlappingEdges";
        case ErrorKind::OverlappingParties:
            return "OverlappingParties";
        case ErrorKind::UncoveredVertex:
            return "UncoveredVertex";
        case ErrorKind::CircuitOutOfScope:
            return "CircuitOutOfScope";
        case ErrorKind::BadWeights:
            return "BadWeights";
        case ErrorKind::BadLabels:
            return "BadLabels";
        case ErrorKind::MissingPostEntry:
            return "MissingPostEntry";
        case ErrorKind::ZeroProbabilityEvent:
            return "ZeroProbabilityEvent";
        case ErrorKind::ShapeMismatch:
            return "ShapeMismatch";
        case ErrorKind::NotCanonical:
            return "NotCanonical";
        case ErrorKind::Infeasible:
            return "Infeasible";
        case ErrorKind::EnumerationTooLarge:
            return "EnumerationTooLarge";
        case ErrorKind::TooLong:
            return "TooLong";
        case ErrorKind::NotTwoNetwork:
            return "NotTwoNetwork";
        case ErrorKind::MixedSourcePresent:
            return "MixedSourcePresent";
        case ErrorKind::BadPartition:
            return "BadPartition";
        case ErrorKind::TooManyQubits:
            return "TooManyQubits";
        case ErrorKind::NotTracePreserving:
            return "NotTracePreserving";
        case ErrorKind::NotCompletelyPositive:
            return "NotCompletelyPositive";
        case ErrorKind::ParseError:
            return "ParseError";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, const std::string &detail)
    : std::runtime_error(std::string(error_kind_name(kind)) + ": " + detail), kind_(kind), detail_(detail) {
}

ParseError::ParseError(std::size_t line, const std::string &detail)
    : Error(ErrorKind::ParseError, "line " + std::to_string(line) + ": " + detail), line_(line) {
}

}  // namespace qnet
