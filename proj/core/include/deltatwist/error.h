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

#ifndef DELTATWIST_ERROR_H_
#define DELTATWIST_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace deltatwist {

enum class ErrorCode {
  // Linear algebra.
  kIndexOutOfRange,
  kDimensionMismatch,
  // Polynomials.
  kNonzeroRemainder,
  kDivisionByZeroPoly,
  // Graphs and text formats.
  kParseError,
  kUnknownLabel,
  kDuplicateLabel,
  kDuplicateEdge,
  kSelfEdgeViaEdgeLine,
  kMissingVerticesLine,
  kLoopStatusMismatch,
  kBadParams,
  // Set systems.
  kNotProper,
  kNotNormal,
  kUnknownElement,
  kDuplicateFeasible,
  kSingletonStatusMismatch,
  kPreconditionViolated,
  kHypothesisViolated,
  // Bouquets.
  kLabelCountNotTwo,
  kUnknownTwistLabel,
  kUnknownEdgeLabel,
  // Enumeration guards.
  kTooLarge,
  // Command line.
  kUnknownIdentity,
};

std::string_view ErrorCodeName(ErrorCode code);

// All recoverable failures in the library are reported with this type.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// Default ceilings for exhaustive enumeration. Callers may pass their own.
inline constexpr int kDefaultSetSystemLimit = 20;
inline constexpr int kDefaultRankTableLimit = 26;
inline constexpr int kDefaultBouquetLimit = 16;

}  // namespace deltatwist

#endif  // DELTATWIST_ERROR_H_
