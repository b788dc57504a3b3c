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

// Bouquets (one-vertex ribbon graphs) as signed rotation systems.
//
// The rotation is the cyclic word of half-edge labels around the vertex,
// stored as its lexicographically least cyclic shift. Edges are numbered in
// order of first appearance in that word, and edge subsets are bitmasks over
// this numbering.

#ifndef DELTATWIST_BOUQUET_H_
#define DELTATWIST_BOUQUET_H_

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "deltatwist/error.h"
#include "deltatwist/graph.h"
#include "deltatwist/polynomial.h"
#include "deltatwist/random.h"
#include "deltatwist/set_system.h"

namespace deltatwist {

class Bouquet {
 public:
  Bouquet() = default;
  // Throws kLabelCountNotTwo, kUnknownTwistLabel, or kTooLarge above 63
  // edges.
  Bouquet(std::vector<std::string> rotation, std::vector<std::string> twisted);

  const std::vector<std::string>& rotation() const { return rotation_; }
  const std::vector<std::string>& edges() const { return edges_; }
  std::size_t edge_count() const { return edges_.size(); }
  Subset twisted() const { return twisted_; }
  bool IsTwisted(std::size_t e) const { return (twisted_ >> e) & 1; }
  Subset AllEdges() const;

  // Positions of the two half-edges of edge e in rotation(), ascending.
  const std::array<std::size_t, 2>& Ends(std::size_t e) const {
    return ends_[e];
  }
  // Position -> edge index.
  std::size_t EdgeAt(std::size_t position) const { return at_[position]; }

  // Throw kUnknownEdgeLabel.
  std::size_t IndexOf(std::string_view label) const;
  Subset SubsetOf(const std::vector<std::string>& labels) const;
  std::vector<std::string> LabelsOf(Subset s) const;

  friend bool operator==(const Bouquet& a, const Bouquet& b) {
    return a.rotation_ == b.rotation_ && a.twisted_ == b.twisted_;
  }

 private:
  std::vector<std::string> rotation_;
  std::vector<std::string> edges_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<std::array<std::size_t, 2>> ends_;
  std::vector<std::size_t> at_;
  Subset twisted_ = 0;
};

// Bouquet text format:
//
//   rotation: a b a b
//   twisted: a
//
// The twisted line is optional. Throws kParseError as well as the
// constructor's errors.
Bouquet ParseBouquet(std::string_view text);
std::string SerializeBouquet(const Bouquet& b);

// Boundary curves of the spanning ribbon subgraph with edge set A. The empty
// set gives 1.
int BoundaryComponents(const Bouquet& b, Subset a);
int BoundaryComponents(const Bouquet& b, const std::vector<std::string>& a);

// Vertices are the edges of b, adjacent iff interlaced, looped iff twisted.
LoopedGraph IntersectionGraph(const Bouquet& b);

// Ground E(B), feasible sets the edge sets of spanning quasi-trees.
// Throws kTooLarge above `limit` edges.
SetSystem QuasiTreeDeltaMatroid(const Bouquet& b,
                                int limit = kDefaultBouquetLimit);

// 1 + |E| - bc(E).
int EulerGenus(const Bouquet& b);

// sum over A of z^{eps(B^A)} with eps(B^A) = |E| + 2 - bc(A) - bc(E - A).
// Throws kTooLarge above `limit` edges.
IntPoly PartialDualGenusPolynomial(const Bouquet& b,
                                   int limit = kDefaultBouquetLimit);

// Toggles the twist of every edge in A.
Bouquet PartialPetrial(const Bouquet& b, Subset a);
Bouquet PartialPetrial(const Bouquet& b, const std::vector<std::string>& a);

// Edges e1..ek placed by a uniform shuffle of the doubled label list; each
// edge is twisted with probability twist_prob.
Bouquet RandomBouquet(int edges, double twist_prob, Rng& rng);

}  // namespace deltatwist

#endif  // DELTATWIST_BOUQUET_H_
