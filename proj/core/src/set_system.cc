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

#include "deltatwist/set_system.h"

#include <algorithm>
#include <bit>
#include <limits>
#include <set>
#include <string>
#include <utility>

#include "deltatwist/gf2.h"
#include "deltatwist/graph.h"
#include "text_format.h"

namespace deltatwist {
namespace {

constexpr Subset Bit(std::size_t i) { return Subset{1} << i; }

int Size(Subset s) { return std::popcount(s); }

// Drops bit k and shifts the higher bits down by one.
Subset RemoveBit(Subset s, std::size_t k) {
  const Subset low = s & (Bit(k) - 1);
  const Subset high = (s >> (k + 1)) << k;
  return low | high;
}

std::vector<std::string> WithoutElement(const std::vector<std::string>& ground,
                                        std::size_t e) {
  std::vector<std::string> out;
  out.reserve(ground.size() - 1);
  for (std::size_t i = 0; i < ground.size(); ++i) {
    if (i != e) out.push_back(ground[i]);
  }
  return out;
}

void RequireElement(const SetSystem& d, std::size_t e) {
  if (e >= d.ground_size()) {
    throw Error(ErrorCode::kUnknownElement, "element index " + std::to_string(e));
  }
}

void RequireSubset(const SetSystem& d, Subset a) {
  if ((a & ~d.FullSet()) != 0) {
    throw Error(ErrorCode::kUnknownElement, "subset has bits outside the ground set");
  }
}

void RequireProper(const SetSystem& d) {
  if (!d.IsProper()) {
    throw Error(ErrorCode::kNotProper, "set system has no feasible sets");
  }
}

void RequireEnumerable(std::size_t n, int limit, const char* what) {
  if (static_cast<long long>(n) > limit || n > kMaxGroundSize) {
    throw Error(ErrorCode::kTooLarge, std::string(what) + " over " +
                                          std::to_string(n) +
                                          " elements exceeds limit " +
                                          std::to_string(limit));
  }
}

}  // namespace

SetSystem::SetSystem(std::vector<std::string> ground, std::vector<Subset> feasible)
    : ground_(std::move(ground)), feasible_(std::move(feasible)) {
  if (ground_.size() > kMaxGroundSize) {
    throw Error(ErrorCode::kTooLarge,
                "ground sets are limited to " + std::to_string(kMaxGroundSize) +
                    " elements");
  }
  for (std::size_t i = 0; i < ground_.size(); ++i) {
    if (ground_[i].empty()) {
      throw Error(ErrorCode::kParseError, "empty element label");
    }
    if (!index_.emplace(ground_[i], i).second) {
      throw Error(ErrorCode::kDuplicateLabel, "element '" + ground_[i] + "'");
    }
  }
  const Subset full = FullSet();
  for (Subset f : feasible_) {
    if ((f & ~full) != 0) {
      throw Error(ErrorCode::kUnknownElement,
                  "feasible set has bits outside the ground set");
    }
  }
  std::sort(feasible_.begin(), feasible_.end());
  feasible_.erase(std::unique(feasible_.begin(), feasible_.end()), feasible_.end());
}

Subset SetSystem::FullSet() const { return Bit(ground_.size()) - 1; }

bool SetSystem::IsFeasible(Subset s) const {
  return std::binary_search(feasible_.begin(), feasible_.end(), s);
}

std::size_t SetSystem::IndexOf(std::string_view label) const {
  const auto it = index_.find(std::string(label));
  if (it == index_.end()) {
    throw Error(ErrorCode::kUnknownElement, "element '" + std::string(label) + "'");
  }
  return it->second;
}

Subset SetSystem::SubsetOf(std::span<const std::string> labels) const {
  Subset s = 0;
  for (const auto& label : labels) s |= Bit(IndexOf(label));
  return s;
}

std::vector<std::string> SetSystem::LabelsOf(Subset s) const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < ground_.size(); ++i) {
    if (s & Bit(i)) out.push_back(ground_[i]);
  }
  return out;
}

SetSystem ParseSetSystem(std::string_view text) {
  const auto lines = internal::ReadKeyedLines(text);
  if (lines.empty() || lines.front().key != "ground") {
    throw Error(ErrorCode::kParseError,
                "first significant line must be 'ground: ...'");
  }
  const SetSystem empty_family(lines.front().tokens, {});
  std::vector<Subset> feasible;
  std::set<Subset> seen;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const auto& line = lines[k];
    const std::string where = "line " + std::to_string(line.line_number) + ": ";
    if (line.key != "feasible") {
      throw Error(ErrorCode::kParseError, where + "unknown key '" + line.key + "'");
    }
    std::set<std::string> distinct(line.tokens.begin(), line.tokens.end());
    if (distinct.size() != line.tokens.size()) {
      throw Error(ErrorCode::kParseError, where + "repeated element in feasible set");
    }
    const Subset s = empty_family.SubsetOf(line.tokens);
    if (!seen.insert(s).second) {
      throw Error(ErrorCode::kDuplicateFeasible, where + "feasible set listed twice");
    }
    feasible.push_back(s);
  }
  return SetSystem(lines.front().tokens, std::move(feasible));
}

std::string SerializeSetSystem(const SetSystem& s) {
  std::string out = "ground:" + internal::JoinTokens(s.ground()) + "\n";
  for (Subset f : s.feasible()) {
    out += "feasible:" + internal::JoinTokens(s.LabelsOf(f)) + "\n";
  }
  return out;
}

SetSystem Reorder(const SetSystem& s, const std::vector<std::string>& order) {
  if (order.size() != s.ground_size()) {
    throw Error(ErrorCode::kUnknownElement, "reorder needs a permutation of the ground");
  }
  std::vector<std::size_t> new_position(s.ground_size());
  std::vector<bool> used(s.ground_size(), false);
  for (std::size_t i = 0; i < order.size(); ++i) {
    const std::size_t old = s.IndexOf(order[i]);
    if (used[old]) {
      throw Error(ErrorCode::kDuplicateLabel, "element '" + order[i] + "' repeated");
    }
    used[old] = true;
    new_position[old] = i;
  }
  std::vector<Subset> family;
  family.reserve(s.feasible().size());
  for (Subset f : s.feasible()) {
    Subset g = 0;
    for (Subset rest = f; rest != 0; rest &= rest - 1) {
      g |= Bit(new_position[std::countr_zero(rest)]);
    }
    family.push_back(g);
  }
  return SetSystem(order, std::move(family));
}

bool EquivalentUpToGroundOrder(const SetSystem& a, const SetSystem& b) {
  if (a.ground_size() != b.ground_size()) return false;
  for (const auto& label : a.ground()) {
    try {
      b.IndexOf(label);
    } catch (const Error&) {
      return false;
    }
  }
  return Reorder(b, a.ground()) == a;
}

std::optional<ExchangeViolation> FindExchangeViolation(const SetSystem& s) {
  RequireProper(s);
  for (Subset x : s.feasible()) {
    for (Subset y : s.feasible()) {
      const Subset diff = x ^ y;
      for (Subset us = diff; us != 0; us &= us - 1) {
        const Subset u = us & -us;
        bool found = false;
        for (Subset vs = diff; vs != 0 && !found; vs &= vs - 1) {
          const Subset v = vs & -vs;
          found = s.IsFeasible(x ^ (u | v));
        }
        if (!found) {
          return ExchangeViolation{x, y,
                                   static_cast<std::size_t>(std::countr_zero(u))};
        }
      }
    }
  }
  return std::nullopt;
}

SetSystem Twist(const SetSystem& d, Subset a) {
  RequireSubset(d, a);
  std::vector<Subset> family;
  family.reserve(d.feasible().size());
  for (Subset f : d.feasible()) family.push_back(f ^ a);
  return SetSystem(d.ground(), std::move(family));
}

int Width(const SetSystem& d) {
  RequireProper(d);
  int lo = std::numeric_limits<int>::max();
  int hi = 0;
  for (Subset f : d.feasible()) {
    lo = std::min(lo, Size(f));
    hi = std::max(hi, Size(f));
  }
  return hi - lo;
}

int DeltaRank(const SetSystem& d, Subset a) {
  RequireProper(d);
  RequireSubset(d, a);
  int best = std::numeric_limits<int>::max();
  for (Subset f : d.feasible()) best = std::min(best, Size(a ^ f));
  return static_cast<int>(d.ground_size()) - best;
}

namespace {

// {F : e not in F} with e removed from the ground.
SetSystem KeepAvoiding(const SetSystem& d, std::size_t e) {
  std::vector<Subset> family;
  for (Subset f : d.feasible()) {
    if ((f & Bit(e)) == 0) family.push_back(RemoveBit(f, e));
  }
  return SetSystem(WithoutElement(d.ground(), e), std::move(family));
}

// {F - e : e in F} with e removed from the ground.
SetSystem KeepContaining(const SetSystem& d, std::size_t e) {
  std::vector<Subset> family;
  for (Subset f : d.feasible()) {
    if (f & Bit(e)) family.push_back(RemoveBit(f, e));
  }
  return SetSystem(WithoutElement(d.ground(), e), std::move(family));
}

bool IsColoop(const SetSystem& d, std::size_t e) {
  return d.IsProper() && std::all_of(d.feasible().begin(), d.feasible().end(),
                                     [e](Subset f) { return (f & Bit(e)) != 0; });
}

bool IsLoop(const SetSystem& d, std::size_t e) {
  return std::none_of(d.feasible().begin(), d.feasible().end(),
                      [e](Subset f) { return (f & Bit(e)) != 0; });
}

}  // namespace

SetSystem Delete(const SetSystem& d, std::size_t e) {
  RequireElement(d, e);
  return IsColoop(d, e) ? KeepContaining(d, e) : KeepAvoiding(d, e);
}

SetSystem Delete(const SetSystem& d, std::string_view e) {
  return Delete(d, d.IndexOf(e));
}

SetSystem Contract(const SetSystem& d, std::size_t e) {
  RequireElement(d, e);
  return IsLoop(d, e) ? KeepAvoiding(d, e) : KeepContaining(d, e);
}

SetSystem Contract(const SetSystem& d, std::string_view e) {
  return Contract(d, d.IndexOf(e));
}

SetSystem Restrict(const SetSystem& d, Subset a) {
  RequireSubset(d, a);
  SetSystem out = d;
  for (const auto& label : d.LabelsOf(d.FullSet() & ~a)) out = Delete(out, label);
  return out;
}

SetSystem DirectSum(const SetSystem& d1, const SetSystem& d2) {
  std::vector<std::string> ground = d1.ground();
  std::unordered_map<std::string, std::size_t> used;
  for (std::size_t i = 0; i < ground.size(); ++i) used.emplace(ground[i], i);
  for (const auto& label : d2.ground()) {
    std::string fresh = FreshLabel(label, used);
    used.emplace(fresh, ground.size());
    ground.push_back(std::move(fresh));
  }
  if (ground.size() > kMaxGroundSize) {
    throw Error(ErrorCode::kTooLarge, "direct sum ground too large");
  }
  const std::size_t shift = d1.ground_size();
  std::vector<Subset> family;
  family.reserve(d1.feasible().size() * d2.feasible().size());
  for (Subset f1 : d1.feasible()) {
    for (Subset f2 : d2.feasible()) family.push_back(f1 | (f2 << shift));
  }
  return SetSystem(std::move(ground), std::move(family));
}

SetSystem LoopComplement(const SetSystem& s, std::size_t e) {
  RequireElement(s, e);
  std::vector<Subset> family;
  // Sets avoiding e are unchanged. A set F containing e survives iff exactly
  // one of F, F - e was feasible.
  for (Subset f : s.feasible()) {
    if ((f & Bit(e)) == 0) {
      family.push_back(f);
      if (!s.IsFeasible(f | Bit(e))) family.push_back(f | Bit(e));
    } else if (!s.IsFeasible(f & ~Bit(e))) {
      family.push_back(f);
    }
  }
  return SetSystem(s.ground(), std::move(family));
}

SetSystem LoopComplement(const SetSystem& s, std::string_view e) {
  return LoopComplement(s, s.IndexOf(e));
}

SetSystem FromGraph(const LoopedGraph& g, int limit) {
  RequireEnumerable(g.size(), limit, "principal-minor enumeration");
  const std::vector<std::uint64_t> rows = g.adjacency().RowMasks();
  const Subset count = Bit(g.size());
  std::vector<Subset> family;
  for (Subset s = 0; s < count; ++s) {
    if (MaskedRank(rows, s) == Size(s)) family.push_back(s);
  }
  return SetSystem(g.labels(), std::move(family));
}

LoopedGraph ToGraph(const SetSystem& d) {
  if (!d.IsNormal()) {
    throw Error(ErrorCode::kNotNormal, "graph recovery needs the empty set feasible");
  }
  LoopedGraph g(d.ground());
  const std::size_t n = d.ground_size();
  for (std::size_t v = 0; v < n; ++v) g.SetLoop(v, d.IsFeasible(Bit(v)));
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      const bool pair = d.IsFeasible(Bit(u) | Bit(v));
      const bool both_singletons = d.IsFeasible(Bit(u)) && d.IsFeasible(Bit(v));
      g.SetEdge(u, v, pair != both_singletons);
    }
  }
  return g;
}

bool RoundTripsThroughGraph(const SetSystem& d, int limit) {
  if (!d.IsNormal()) return false;
  return FromGraph(ToGraph(d), limit) == d;
}

SetSystem OnePointJoin(const SetSystem& s1, std::size_t e1, const SetSystem& s2,
                       std::size_t e2, int limit) {
  RequireElement(s1, e1);
  RequireElement(s2, e2);
  const bool single1 = s1.IsFeasible(Bit(e1));
  const bool single2 = s2.IsFeasible(Bit(e2));
  if (single1 != single2) {
    throw Error(ErrorCode::kSingletonStatusMismatch,
                "{" + s1.ground()[e1] + "} and {" + s2.ground()[e2] +
                    "} must both be feasible or both infeasible");
  }
  const std::size_t n1 = s1.ground_size();
  const std::size_t n2 = s2.ground_size();
  RequireEnumerable(n1 + n2 - 1, limit, "one-point join");

  std::vector<std::string> ground = s1.ground();
  std::unordered_map<std::string, std::size_t> used;
  for (std::size_t i = 0; i < ground.size(); ++i) used.emplace(ground[i], i);
  std::vector<std::size_t> position(n2, 0);  // S2 index -> joined index
  for (std::size_t j = 0; j < n2; ++j) {
    if (j == e2) continue;
    std::string fresh = FreshLabel(s2.ground()[j], used);
    used.emplace(fresh, ground.size());
    position[j] = ground.size();
    ground.push_back(std::move(fresh));
  }

  // Enumerate F as (F1', F2', e in F). F1' ranges over subsets of E1 - e1,
  // F2' over subsets of E2 - e2, both written in their own ground's bits.
  const Subset e1_bit = Bit(e1);
  const Subset e2_bit = Bit(e2);
  const Subset rest1 = s1.FullSet() & ~e1_bit;
  const Subset rest2 = s2.FullSet() & ~e2_bit;
  std::vector<Subset> family;
  for (Subset f1 = rest1;; f1 = (f1 - 1) & rest1) {
    const bool in1_without = s1.IsFeasible(f1);
    const bool in1_with = s1.IsFeasible(f1 | e1_bit);
    for (Subset f2 = rest2;; f2 = (f2 - 1) & rest2) {
      const bool in2_without = s2.IsFeasible(f2);
      const bool in2_with = s2.IsFeasible(f2 | e2_bit);

      Subset joined_rest = f1;
      for (Subset r = f2; r != 0; r &= r - 1) {
        joined_rest |= Bit(position[std::countr_zero(r)]);
      }
      // e not in F: both sides feasible without their join element.
      if (in1_without && in2_without) family.push_back(joined_rest);
      // e in F: the three-term GF(2) sum.
      const bool with_e = ((in1_with && in2_without) != (in1_without && in2_with)) !=
                          (single1 && in1_without && in2_without);
      if (with_e) family.push_back(joined_rest | e1_bit);

      if (f2 == 0) break;
    }
    if (f1 == 0) break;
  }
  return SetSystem(std::move(ground), std::move(family));
}

SetSystem OnePointJoin(const SetSystem& s1, std::string_view e1,
                       const SetSystem& s2, std::string_view e2, int limit) {
  return OnePointJoin(s1, s1.IndexOf(e1), s2, s2.IndexOf(e2), limit);
}

std::optional<NearestFeasible> FindNearestFeasible(const SetSystem& d, Subset x,
                                                   Subset y, Subset z) {
  RequireProper(d);
  RequireSubset(d, x | y | z);
  if ((y & ~x) != 0 || (z & x) != 0) {
    throw Error(ErrorCode::kPreconditionViolated,
                "need Y inside X and Z outside X");
  }
  int global = std::numeric_limits<int>::max();
  std::optional<NearestFeasible> best;
  for (Subset f : d.feasible()) {
    const int dist = Size(x ^ f);
    global = std::min(global, dist);
    const bool admissible = (f & y) == y && (f & z) == 0;
    if (admissible && (!best || dist < best->distance)) {
      best = NearestFeasible{f, dist, 0};
    }
  }
  if (best) best->global_minimum = global;
  return best;
}

WidthRestrictionCheck CheckWidthOfRestriction(const SetSystem& d, Subset a) {
  if (!d.IsNormal()) {
    throw Error(ErrorCode::kNotNormal, "width-of-restriction formula needs a normal system");
  }
  RequireSubset(d, a);
  int nearest = std::numeric_limits<int>::max();
  for (Subset f : d.feasible()) nearest = std::min(nearest, Size(a ^ f));
  return WidthRestrictionCheck{Width(Restrict(d, a)), Size(a) - nearest};
}

}  // namespace deltatwist
