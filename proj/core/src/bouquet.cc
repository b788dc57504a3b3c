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

#include "deltatwist/bouquet.h"

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <utility>

#include "text_format.h"

namespace deltatwist {
namespace {

std::vector<std::string> LeastRotation(const std::vector<std::string>& word) {
  std::vector<std::string> best = word;
  std::vector<std::string> shifted = word;
  for (std::size_t k = 1; k < word.size(); ++k) {
    std::rotate(shifted.begin(), shifted.begin() + 1, shifted.end());
    if (shifted < best) best = shifted;
  }
  return best;
}

void CheckLimit(const Bouquet& b, int limit) {
  if (static_cast<long long>(b.edge_count()) > limit) {
    throw Error(ErrorCode::kTooLarge,
                "bouquet with " + std::to_string(b.edge_count()) +
                    " edges exceeds limit " + std::to_string(limit));
  }
}

// bc(A) for every A, indexed by mask.
std::vector<int> BoundaryTable(const Bouquet& b) {
  const Subset count = Subset{1} << b.edge_count();
  std::vector<int> table(count);
  for (Subset a = 0; a < count; ++a) table[a] = BoundaryComponents(b, a);
  return table;
}

}  // namespace

Bouquet::Bouquet(std::vector<std::string> rotation,
                 std::vector<std::string> twisted) {
  std::map<std::string, int> counts;
  for (const auto& t : rotation) ++counts[t];
  for (const auto& [label, n] : counts) {
    if (n != 2) {
      throw Error(ErrorCode::kLabelCountNotTwo,
                  "edge '" + label + "' occurs " + std::to_string(n) +
                      " times in the rotation");
    }
  }
  if (counts.size() > kMaxGroundSize) {
    throw Error(ErrorCode::kTooLarge, "a bouquet holds at most 63 edges");
  }
  rotation_ = LeastRotation(rotation);
  at_.resize(rotation_.size());
  for (std::size_t p = 0; p < rotation_.size(); ++p) {
    auto [it, inserted] = index_.emplace(rotation_[p], edges_.size());
    if (inserted) {
      edges_.push_back(rotation_[p]);
      ends_.push_back({p, p});
    } else {
      ends_[it->second][1] = p;
    }
    at_[p] = it->second;
  }
  for (const auto& label : twisted) {
    auto it = index_.find(label);
    if (it == index_.end()) {
      throw Error(ErrorCode::kUnknownTwistLabel,
                  "twisted edge '" + label + "' is not in the rotation");
    }
    twisted_ |= Subset{1} << it->second;
  }
}

Subset Bouquet::AllEdges() const {
  return edges_.empty() ? 0 : (~Subset{0} >> (64 - edges_.size()));
}

std::size_t Bouquet::IndexOf(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) {
    throw Error(ErrorCode::kUnknownEdgeLabel,
                "no edge '" + std::string(label) + "'");
  }
  return it->second;
}

Subset Bouquet::SubsetOf(const std::vector<std::string>& labels) const {
  Subset s = 0;
  for (const auto& l : labels) s |= Subset{1} << IndexOf(l);
  return s;
}

std::vector<std::string> Bouquet::LabelsOf(Subset s) const {
  std::vector<std::string> out;
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    if ((s >> e) & 1) out.push_back(edges_[e]);
  }
  return out;
}

Bouquet ParseBouquet(std::string_view text) {
  const auto lines = internal::ReadKeyedLines(text);
  std::vector<std::string> rotation;
  std::vector<std::string> twisted;
  bool have_rotation = false;
  bool have_twisted = false;
  for (const auto& line : lines) {
    const std::string where = "line " + std::to_string(line.line_number) + ": ";
    if (line.key == "rotation" && !have_rotation) {
      rotation = line.tokens;
      have_rotation = true;
    } else if (line.key == "twisted" && have_rotation && !have_twisted) {
      twisted = line.tokens;
      have_twisted = true;
    } else {
      throw Error(ErrorCode::kParseError,
                  where + "unexpected '" + line.key + ":' line");
    }
  }
  if (!have_rotation) {
    throw Error(ErrorCode::kParseError, "missing 'rotation: ...' line");
  }
  return Bouquet(std::move(rotation), std::move(twisted));
}

std::string SerializeBouquet(const Bouquet& b) {
  std::string out = "rotation:" + internal::JoinTokens(b.rotation()) + "\n";
  if (b.twisted() != 0) {
    out += "twisted:" + internal::JoinTokens(b.LabelsOf(b.twisted())) + "\n";
  }
  return out;
}

// State 2p + s: leaving corner s of attachment p along the vertex boundary,
// forward (s = 1) or backward (s = 0). Each boundary curve is met once in
// each direction.
int BoundaryComponents(const Bouquet& b, Subset a) {
  if ((a & ~b.AllEdges()) != 0) {
    throw Error(ErrorCode::kUnknownEdgeLabel, "edge subset outside E(B)");
  }
  const std::size_t len = b.rotation().size();
  if (len == 0) return 1;
  const std::size_t states = 2 * len;
  std::vector<char> seen(states, 0);
  int orbits = 0;
  for (std::size_t start = 0; start < states; ++start) {
    if (seen[start]) continue;
    ++orbits;
    std::size_t state = start;
    while (!seen[state]) {
      seen[state] = 1;
      const std::size_t p = state / 2;
      const std::size_t s = state % 2;
      const std::size_t p2 = s == 1 ? (p + 1) % len : (p + len - 1) % len;
      const std::size_t s2 = 1 - s;
      const std::size_t e = b.EdgeAt(p2);
      if (((a >> e) & 1) == 0) {
        state = 2 * p2 + (1 - s2);
        continue;
      }
      const auto& ends = b.Ends(e);
      const std::size_t q = ends[0] == p2 ? ends[1] : ends[0];
      state = 2 * q + (b.IsTwisted(e) ? s2 : 1 - s2);
    }
  }
  return orbits / 2;
}

int BoundaryComponents(const Bouquet& b, const std::vector<std::string>& a) {
  return BoundaryComponents(b, b.SubsetOf(a));
}

LoopedGraph IntersectionGraph(const Bouquet& b) {
  LoopedGraph g(b.edges());
  const std::size_t n = b.edge_count();
  for (std::size_t u = 0; u < n; ++u) {
    if (b.IsTwisted(u)) g.SetLoop(u, true);
    const auto& eu = b.Ends(u);
    for (std::size_t v = u + 1; v < n; ++v) {
      const auto& ev = b.Ends(v);
      const bool first = eu[0] < ev[0] && ev[0] < eu[1];
      const bool second = eu[0] < ev[1] && ev[1] < eu[1];
      if (first != second) g.SetEdge(u, v, true);
    }
  }
  return g;
}

SetSystem QuasiTreeDeltaMatroid(const Bouquet& b, int limit) {
  CheckLimit(b, limit);
  const Subset count = Subset{1} << b.edge_count();
  std::vector<Subset> feasible;
  for (Subset a = 0; a < count; ++a) {
    if (BoundaryComponents(b, a) == 1) feasible.push_back(a);
  }
  return SetSystem(b.edges(), std::move(feasible));
}

int EulerGenus(const Bouquet& b) {
  return 1 + static_cast<int>(b.edge_count()) -
         BoundaryComponents(b, b.AllEdges());
}

IntPoly PartialDualGenusPolynomial(const Bouquet& b, int limit) {
  CheckLimit(b, limit);
  const std::vector<int> bc = BoundaryTable(b);
  const Subset full = b.AllEdges();
  const int e = static_cast<int>(b.edge_count());
  std::vector<std::uint64_t> histogram(2 * e + 2, 0);
  for (Subset a = 0; a < bc.size(); ++a) {
    ++histogram[static_cast<std::size_t>(e + 2 - bc[a] - bc[full ^ a])];
  }
  return FromWidthHistogram(histogram);
}

Bouquet PartialPetrial(const Bouquet& b, Subset a) {
  if ((a & ~b.AllEdges()) != 0) {
    throw Error(ErrorCode::kUnknownEdgeLabel, "edge subset outside E(B)");
  }
  return Bouquet(b.rotation(), b.LabelsOf(b.twisted() ^ a));
}

Bouquet PartialPetrial(const Bouquet& b, const std::vector<std::string>& a) {
  return PartialPetrial(b, b.SubsetOf(a));
}

Bouquet RandomBouquet(int edges, double twist_prob, Rng& rng) {
  if (edges < 0 || edges > static_cast<int>(kMaxGroundSize)) {
    throw Error(ErrorCode::kBadParams, "edge count out of range");
  }
  std::vector<std::string> word;
  for (int k = 1; k <= edges; ++k) {
    word.push_back("e" + std::to_string(k));
    word.push_back("e" + std::to_string(k));
  }
  for (std::size_t i = word.size(); i > 1; --i) {
    std::swap(word[i - 1], word[rng.Below(i)]);
  }
  std::vector<std::string> twisted;
  for (int k = 1; k <= edges; ++k) {
    if (rng.Bernoulli(twist_prob)) twisted.push_back("e" + std::to_string(k));
  }
  return Bouquet(std::move(word), std::move(twisted));
}

}  // namespace deltatwist
