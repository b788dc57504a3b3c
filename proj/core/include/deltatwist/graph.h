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

#ifndef DELTATWIST_GRAPH_H_
#define DELTATWIST_GRAPH_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "deltatwist/gf2.h"

namespace deltatwist {

class Rng;

// A looped simple graph: at most one edge per pair of distinct vertices and
// at most one loop per vertex. Vertices are named; their order is the row
// order of the adjacency matrix, whose diagonal holds the loops.
class LoopedGraph {
 public:
  LoopedGraph() = default;
  // Edgeless, loopless graph on `labels`. Throws kDuplicateLabel.
  explicit LoopedGraph(std::vector<std::string> labels);
  // Throws kDimensionMismatch if sizes disagree.
  LoopedGraph(std::vector<std::string> labels, Gf2SymMatrix adjacency);

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  bool Contains(std::string_view label) const;
  // Throws kUnknownLabel.
  std::size_t IndexOf(std::string_view label) const;

  bool HasLoop(std::size_t v) const { return adjacency_.Get(v, v); }
  bool HasEdge(std::size_t u, std::size_t v) const {
    return u != v && adjacency_.Get(u, v);
  }
  bool IsUnlooped() const;
  std::size_t EdgeCount() const;  // loops excluded
  std::vector<std::size_t> Neighbors(std::size_t v) const;

  // Throws kSelfEdgeViaEdgeLine for u == v and kDuplicateEdge if present.
  void AddEdge(std::size_t u, std::size_t v);
  void SetEdge(std::size_t u, std::size_t v, bool present);
  void SetLoop(std::size_t v, bool looped);

  const Gf2SymMatrix& adjacency() const { return adjacency_; }

  friend bool operator==(const LoopedGraph& a, const LoopedGraph& b) {
    return a.labels_ == b.labels_ && a.adjacency_ == b.adjacency_;
  }

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, std::size_t> index_;
  Gf2SymMatrix adjacency_;
};

// Graph text format ('#' starts a comment, tokens are whitespace-separated):
//
//   vertices: a v b
//   loops: v
//   edge: a v
//   edge: v b
LoopedGraph ParseGraph(std::string_view text);
std::string SerializeGraph(const LoopedGraph& g);

Gf2SymMatrix AdjacencyMatrix(const LoopedGraph& g);

// G+v: toggles the loop at v.
LoopedGraph LoopComplement(const LoopedGraph& g, std::string_view v);
LoopedGraph LoopComplement(const LoopedGraph& g, std::size_t v);

// G-v.
LoopedGraph DeleteVertex(const LoopedGraph& g, std::string_view v);
LoopedGraph DeleteVertex(const LoopedGraph& g, std::size_t v);

// G1's vertices in order (v1 keeps its name and position), followed by G2's
// vertices other than v2. G2 labels that collide are suffixed "_2", "_3", ...
// Throws kLoopStatusMismatch unless v1 and v2 are both looped or both not.
LoopedGraph OnePointJoin(const LoopedGraph& g1, std::string_view v1,
                         const LoopedGraph& g2, std::string_view v2);
LoopedGraph OnePointJoin(const LoopedGraph& g1, std::size_t v1,
                         const LoopedGraph& g2, std::size_t v2);

LoopedGraph DisjointUnion(const LoopedGraph& g1, const LoopedGraph& g2);

// Returns `base` if unused, otherwise the first free "base_k", k >= 2.
std::string FreshLabel(const std::string& base,
                       const std::unordered_map<std::string, std::size_t>& used);

// Named families. Vertices of complete/path/random are v1..vn; star(n) is
// the hub v0 with leaves v1..vn; windmill(n, m) is the hub h plus blades
// b<i>_<j> and is the m-fold one-point join of K_n at a common vertex.
LoopedGraph CompleteGraph(int n);
LoopedGraph PathGraph(int n);
LoopedGraph StarGraph(int leaves);
LoopedGraph WindmillGraph(int n, int m);
LoopedGraph RandomGraph(int n, double edge_prob, double loop_prob, Rng& rng);

// Dispatch by family name ("complete", "path", "star", "windmill",
// "random"). Throws kBadParams on an unknown family or invalid parameters.
LoopedGraph GenerateGraph(std::string_view family,
                          const std::vector<double>& params,
                          std::uint64_t seed = 0);

}  // namespace deltatwist

#endif  // DELTATWIST_GRAPH_H_
