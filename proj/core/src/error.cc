// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "deltatwist/error.h"

#include <string>

namespace deltatwist {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kIndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kNonzeroRemainder: return "NonzeroRemainder";
    case ErrorCode::kDivisionByZeroPoly: return "DivisionByZeroPoly";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kUnknownLabel: return "UnknownLabel";
    case ErrorCode::kDuplicateLabel: return "DuplicateLabel";
    case ErrorCode::kDuplicateEdge: return "DuplicateEdge";
    case ErrorCode::kSelfEdgeViaEdgeLine: return "SelfEdgeViaEdgeLine";
    case ErrorCode::kMissingVerticesLine: return "MissingVerticesLine";
    case ErrorCode::kLoopStatusMismatch: return "LoopStatusMismatch";
    case ErrorCode::kBadParams: return "BadParams";
    case ErrorCode::kNotProper: return "NotProper";
    case ErrorCode::kNotNormal: return "NotNormal";
    case ErrorCode::kUnknownElement: return "UnknownElement";
    case ErrorCode::kDuplicateFeasible: return "DuplicateFeasible";
    case ErrorCode::kSingletonStatusMismatch: return "SingletonStatusMismatch";
    case ErrorCode::kPreconditionViolated: return "PreconditionViolated";
    case ErrorCode::kHypothesisViolated: return "HypothesisViolated";
    case ErrorCode::kLabelCountNotTwo: return "LabelCountNotTwo";
    case ErrorCode::kUnknownTwistLabel: return "UnknownTwistLabel";
    case ErrorCode::kUnknownEdgeLabel: return "UnknownEdgeLabel";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kUnknownIdentity: return "UnknownIdentity";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
      code_(code) {}

}  // namespace deltatwist
