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

// Set systems (E, F) and delta-matroids.
//
// Subsets of the ground set are bitmasks: bit i stands for ground()[i]. The
// feasible family is kept sorted and duplicate-free, so two systems over the
// same ground order are equal exactly when their families compare equal.

#ifndef DELTATWIST_SET_SYSTEM_H_
#define DELTATWIST_SET_SYSTEM_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "deltatwist/error.h"

namespace deltatwist {

class LoopedGraph;

using Subset = std::uint64_t;

inline constexpr std::size_t kMaxGroundSize = 63;

class SetSystem {
 public:
  SetSystem() = default;
  // The family is sorted and deduplicated. Throws kDuplicateLabel,
  // kTooLarge (more than 63 elements) or kUnknownElement (a mask with bits
  // outside the ground set).
  SetSystem(std::vector<std::string> ground, std::vector<Subset> feasible);

  const std::vector<std::string>& ground() const { return ground_; }
  std::size_t ground_size() const { return ground_.size(); }
  const std::vector<Subset>& feasible() const { return feasible_; }
  Subset FullSet() const;

  bool IsProper() const { return !feasible_.empty(); }
  bool IsNormal() const { return IsFeasible(0); }
  bool IsFeasible(Subset s) const;

  // Throw kUnknownElement.
  std::size_t IndexOf(std::string_view label) const;
  Subset SubsetOf(std::span<const std::string> labels) const;
  std::vector<std::string> LabelsOf(Subset s) const;

  friend bool operator==(const SetSystem& a, const SetSystem& b) {
    return a.ground_ == b.ground_ && a.feasible_ == b.feasible_;
  }

 private:
  std::vector<std::string> ground_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<Subset> feasible_;
};

// Set-system text format:
//
//   ground: a v b
//   feasible:          # the empty set
//   feasible: a v
//
// Throws kParseError, kUnknownElement or kDuplicateFeasible.
SetSystem ParseSetSystem(std::string_view text);
std::string SerializeSetSystem(const SetSystem& s);

// True if both systems have the same ground labels (in any order) and the
// same family once elements are matched by label.
bool EquivalentUpToGroundOrder(const SetSystem& a, const SetSystem& b);
// The same system with the ground listed in `order` (a permutation).
SetSystem Reorder(const SetSystem& s, const std::vector<std::string>& order);

// ---------------------------------------------------------------------------
// Symmetric exchange.

struct ExchangeViolation {
  Subset x = 0;
  Subset y = 0;
  std::size_t u = 0;  // element of X xor Y with no valid partner v
};

// Brute force over all X, Y in F and u in X xor Y (v = u allowed). Throws
// kNotProper.
std::optional<ExchangeViolation> FindExchangeViolation(const SetSystem& s);
inline bool SatisfiesSymmetricExchange(const SetSystem& s) {
  return !FindExchangeViolation(s).has_value();
}

// ---------------------------------------------------------------------------
// Twists, widths and ranks.

// D*A = (E, {X xor A : X in F}).
SetSystem Twist(const SetSystem& d, Subset a);
// max |F| - min |F|. Throws kNotProper.
int Width(const SetSystem& d);
// |E| - min |A xor F|. Throws kNotProper.
int DeltaRank(const SetSystem& d, Subset a);

// ---------------------------------------------------------------------------
// Minors and sums. Deleting a coloop contracts it; contracting a loop
// deletes it, so every element can be removed either way.

SetSystem Delete(const SetSystem& d, std::size_t e);
SetSystem Delete(const SetSystem& d, std::string_view e);
SetSystem Contract(const SetSystem& d, std::size_t e);
SetSystem Contract(const SetSystem& d, std::string_view e);
// D|A = D \ (E - A), deleting elements of the complement in ground order.
SetSystem Restrict(const SetSystem& d, Subset a);

// Ground is D1's followed by D2's (renamed "_2", "_3", ... on collision).
SetSystem DirectSum(const SetSystem& d1, const SetSystem& d2);

// S+e: F' holds F iff (e not in F and F in F) or (e in F and exactly one of
// F, F-e is in F).
SetSystem LoopComplement(const SetSystem& s, std::size_t e);
SetSystem LoopComplement(const SetSystem& s, std::string_view e);

// ---------------------------------------------------------------------------
// Graphs.

// D(G): ground V(G) in label order, feasible sets S with M[S] nonsingular.
// Enumerates all 2^n principal submatrices; throws kTooLarge for n > limit.
SetSystem FromGraph(const LoopedGraph& g, int limit = kDefaultSetSystemLimit);

// Reads a looped simple graph back from a normal system: v is looped iff
// {v} is feasible; u ~ v iff ({u,v} feasible and not both singletons) or
// ({u,v} infeasible and both singletons). The rules are applied whether or
// not the system is binary. Throws kNotNormal.
LoopedGraph ToGraph(const SetSystem& d);

// FromGraph(ToGraph(d)) == d: certifies d as a normal binary delta-matroid.
bool RoundTripsThroughGraph(const SetSystem& d,
                            int limit = kDefaultSetSystemLimit);

// One-point join of set systems at e1 and e2. The ground is S1's (e1 keeps
// its name and position) followed by S2's other elements, mirroring
// OnePointJoin on graphs. Throws kSingletonStatusMismatch unless {e1} and
// {e2} are both feasible or both infeasible.
SetSystem OnePointJoin(const SetSystem& s1, std::size_t e1, const SetSystem& s2,
                       std::size_t e2, int limit = kDefaultSetSystemLimit);
SetSystem OnePointJoin(const SetSystem& s1, std::string_view e1,
                       const SetSystem& s2, std::string_view e2,
                       int limit = kDefaultSetSystemLimit);

// ---------------------------------------------------------------------------
// Distance probes.

struct NearestFeasible {
  Subset set = 0;          // smallest mask among constrained minimisers
  int distance = 0;        // |X xor set|
  int global_minimum = 0;  // min |X xor F| over all of F
};

// Among feasible F with Y inside F and Z disjoint from F, one minimising
// |X xor F|. In a delta-matroid its distance equals global_minimum whenever
// any constrained F exists. Returns nullopt if none does. Throws
// kPreconditionViolated unless Y is inside X and Z is outside X, and
// kNotProper for an empty family.
std::optional<NearestFeasible> FindNearestFeasible(const SetSystem& d, Subset x,
                                                   Subset y, Subset z);

struct WidthRestrictionCheck {
  int lhs = 0;  // w(D|A)
  int rhs = 0;  // |A| - min |A xor F|
  bool holds() const { return lhs == rhs; }
};

// Throws kNotNormal.
WidthRestrictionCheck CheckWidthOfRestriction(const SetSystem& d, Subset a);

}  // namespace deltatwist

#endif  // DELTATWIST_SET_SYSTEM_H_
