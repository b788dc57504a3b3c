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

#include "deltatwist/graph.h"

#include <cmath>
#include <string>
#include <utility>

#include "deltatwist/error.h"
#include "deltatwist/random.h"
#include "text_format.h"

namespace deltatwist {

LoopedGraph::LoopedGraph(std::vector<std::string> labels)
    : labels_(std::move(labels)), adjacency_(labels_.size()) {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i].empty()) {
      throw Error(ErrorCode::kParseError, "empty vertex label");
    }
    if (!index_.emplace(labels_[i], i).second) {
      throw Error(ErrorCode::kDuplicateLabel, "vertex '" + labels_[i] + "'");
    }
  }
}

LoopedGraph::LoopedGraph(std::vector<std::string> labels, Gf2SymMatrix adjacency)
    : LoopedGraph(std::move(labels)) {
  if (adjacency.order() != labels_.size()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "adjacency order " + std::to_string(adjacency.order()) +
                    " for " + std::to_string(labels_.size()) + " labels");
  }
  adjacency_ = std::move(adjacency);
}

bool LoopedGraph::Contains(std::string_view label) const {
  return index_.contains(std::string(label));
}

std::size_t LoopedGraph::IndexOf(std::string_view label) const {
  const auto it = index_.find(std::string(label));
  if (it == index_.end()) {
    throw Error(ErrorCode::kUnknownLabel, "vertex '" + std::string(label) + "'");
  }
  return it->second;
}

bool LoopedGraph::IsUnlooped() const {
  for (std::size_t v = 0; v < size(); ++v) {
    if (HasLoop(v)) return false;
  }
  return true;
}

std::size_t LoopedGraph::EdgeCount() const {
  std::size_t count = 0;
  for (std::size_t u = 0; u < size(); ++u) {
    for (std::size_t v = u + 1; v < size(); ++v) count += HasEdge(u, v) ? 1 : 0;
  }
  return count;
}

std::vector<std::size_t> LoopedGraph::Neighbors(std::size_t v) const {
  std::vector<std::size_t> out;
  for (std::size_t u = 0; u < size(); ++u) {
    if (HasEdge(u, v)) out.push_back(u);
  }
  return out;
}

void LoopedGraph::AddEdge(std::size_t u, std::size_t v) {
  if (u == v) {
    throw Error(ErrorCode::kSelfEdgeViaEdgeLine,
                "'" + label(u) + "' cannot be joined to itself; use a loop");
  }
  if (HasEdge(u, v)) {
    throw Error(ErrorCode::kDuplicateEdge,
                "edge " + label(u) + " " + label(v) + " already present");
  }
  adjacency_.Set(u, v, true);
}

void LoopedGraph::SetEdge(std::size_t u, std::size_t v, bool present) {
  if (u == v) {
    throw Error(ErrorCode::kSelfEdgeViaEdgeLine,
                "'" + label(u) + "' cannot be joined to itself; use a loop");
  }
  adjacency_.Set(u, v, present);
}

void LoopedGraph::SetLoop(std::size_t v, bool looped) {
  adjacency_.Set(v, v, looped);
}

LoopedGraph ParseGraph(std::string_view text) {
  const auto lines = internal::ReadKeyedLines(text);
  if (lines.empty() || lines.front().key != "vertices") {
    throw Error(ErrorCode::kMissingVerticesLine,
                "first significant line must be 'vertices: ...'");
  }
  LoopedGraph g(lines.front().tokens);
  std::vector<bool> loop_seen(g.size(), false);
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const auto& line = lines[k];
    const std::string where = "line " + std::to_string(line.line_number) + ": ";
    if (line.key == "loops") {
      for (const auto& token : line.tokens) {
        const std::size_t v = g.IndexOf(token);
        if (loop_seen[v]) {
          throw Error(ErrorCode::kParseError, where + "loop '" + token + "' repeated");
        }
        loop_seen[v] = true;
        g.SetLoop(v, true);
      }
    } else if (line.key == "edge") {
      if (line.tokens.size() != 2) {
        throw Error(ErrorCode::kParseError, where + "'edge:' takes two labels");
      }
      g.AddEdge(g.IndexOf(line.tokens[0]), g.IndexOf(line.tokens[1]));
    } else if (line.key == "vertices") {
      throw Error(ErrorCode::kParseError, where + "second 'vertices:' line");
    } else {
      throw Error(ErrorCode::kParseError, where + "unknown key '" + line.key + "'");
    }
  }
  return g;
}

std::string SerializeGraph(const LoopedGraph& g) {
  std::string out = "vertices:" + internal::JoinTokens(g.labels()) + "\n";
  std::vector<std::string> loops;
  for (std::size_t v = 0; v < g.size(); ++v) {
    if (g.HasLoop(v)) loops.push_back(g.label(v));
  }
  if (!loops.empty()) out += "loops:" + internal::JoinTokens(loops) + "\n";
  for (std::size_t u = 0; u < g.size(); ++u) {
    for (std::size_t v = u + 1; v < g.size(); ++v) {
      if (g.HasEdge(u, v)) out += "edge: " + g.label(u) + " " + g.label(v) + "\n";
    }
  }
  return out;
}

Gf2SymMatrix AdjacencyMatrix(const LoopedGraph& g) { return g.adjacency(); }

LoopedGraph LoopComplement(const LoopedGraph& g, std::string_view v) {
  return LoopComplement(g, g.IndexOf(v));
}

LoopedGraph LoopComplement(const LoopedGraph& g, std::size_t v) {
  LoopedGraph out = g;
  out.SetLoop(v, !g.HasLoop(v));
  return out;
}

LoopedGraph DeleteVertex(const LoopedGraph& g, std::string_view v) {
  return DeleteVertex(g, g.IndexOf(v));
}

LoopedGraph DeleteVertex(const LoopedGraph& g, std::size_t v) {
  if (v >= g.size()) {
    throw Error(ErrorCode::kUnknownLabel, "vertex index " + std::to_string(v));
  }
  std::vector<std::string> labels;
  std::vector<std::size_t> keep;
  for (std::size_t u = 0; u < g.size(); ++u) {
    if (u == v) continue;
    labels.push_back(g.label(u));
    keep.push_back(u);
  }
  return LoopedGraph(std::move(labels), PrincipalSubmatrix(g.adjacency(), keep));
}

std::string FreshLabel(const std::string& base,
                       const std::unordered_map<std::string, std::size_t>& used) {
  if (!used.contains(base)) return base;
  for (int k = 2;; ++k) {
    std::string candidate = base + "_" + std::to_string(k);
    if (!used.contains(candidate)) return candidate;
  }
}

namespace {

// Labels for G1 followed by G2 minus `skip` (npos for none), renamed to avoid
// collisions. out_index[j] gives the new index of G2's vertex j.
std::vector<std::string> MergedLabels(const LoopedGraph& g1,
                                      const LoopedGraph& g2, std::size_t skip,
                                      std::vector<std::size_t>& out_index) {
  std::vector<std::string> labels = g1.labels();
  std::unordered_map<std::string, std::size_t> used;
  for (std::size_t i = 0; i < labels.size(); ++i) used.emplace(labels[i], i);
  out_index.assign(g2.size(), 0);
  for (std::size_t j = 0; j < g2.size(); ++j) {
    if (j == skip) continue;
    std::string fresh = FreshLabel(g2.label(j), used);
    used.emplace(fresh, labels.size());
    out_index[j] = labels.size();
    labels.push_back(std::move(fresh));
  }
  return labels;
}

}  // namespace

LoopedGraph OnePointJoin(const LoopedGraph& g1, std::string_view v1,
                         const LoopedGraph& g2, std::string_view v2) {
  return OnePointJoin(g1, g1.IndexOf(v1), g2, g2.IndexOf(v2));
}

LoopedGraph OnePointJoin(const LoopedGraph& g1, std::size_t v1,
                         const LoopedGraph& g2, std::size_t v2) {
  if (v1 >= g1.size() || v2 >= g2.size()) {
    throw Error(ErrorCode::kUnknownLabel, "join vertex index out of range");
  }
  if (g1.HasLoop(v1) != g2.HasLoop(v2)) {
    throw Error(ErrorCode::kLoopStatusMismatch,
                "'" + g1.label(v1) + "' and '" + g2.label(v2) +
                    "' must both be looped or both unlooped");
  }
  std::vector<std::size_t> index;
  std::vector<std::string> labels = MergedLabels(g1, g2, v2, index);
  index[v2] = v1;
  Gf2SymMatrix adj(labels.size());
  for (std::size_t a = 0; a < g1.size(); ++a) {
    for (std::size_t b = a; b < g1.size(); ++b) {
      if (g1.adjacency().Get(a, b)) adj.Set(a, b, true);
    }
  }
  for (std::size_t a = 0; a < g2.size(); ++a) {
    for (std::size_t b = a; b < g2.size(); ++b) {
      if (g2.adjacency().Get(a, b)) adj.Set(index[a], index[b], true);
    }
  }
  return LoopedGraph(std::move(labels), std::move(adj));
}

LoopedGraph DisjointUnion(const LoopedGraph& g1, const LoopedGraph& g2) {
  std::vector<std::size_t> index;
  std::vector<std::string> labels =
      MergedLabels(g1, g2, static_cast<std::size_t>(-1), index);
  Gf2SymMatrix adj(labels.size());
  for (std::size_t a = 0; a < g1.size(); ++a) {
    for (std::size_t b = a; b < g1.size(); ++b) {
      if (g1.adjacency().Get(a, b)) adj.Set(a, b, true);
    }
  }
  for (std::size_t a = 0; a < g2.size(); ++a) {
    for (std::size_t b = a; b < g2.size(); ++b) {
      if (g2.adjacency().Get(a, b)) adj.Set(index[a], index[b], true);
    }
  }
  return LoopedGraph(std::move(labels), std::move(adj));
}

namespace {

std::vector<std::string> NumberedLabels(int first, int last) {
  std::vector<std::string> labels;
  for (int i = first; i <= last; ++i) labels.push_back("v" + std::to_string(i));
  return labels;
}

void RequireNonNegative(int n, const char* family) {
  if (n < 0) {
    throw Error(ErrorCode::kBadParams,
                std::string(family) + " needs n >= 0, got " + std::to_string(n));
  }
}

}  // namespace

LoopedGraph CompleteGraph(int n) {
  RequireNonNegative(n, "complete");
  LoopedGraph g(NumberedLabels(1, n));
  for (std::size_t u = 0; u < g.size(); ++u) {
    for (std::size_t v = u + 1; v < g.size(); ++v) g.AddEdge(u, v);
  }
  return g;
}

LoopedGraph PathGraph(int n) {
  RequireNonNegative(n, "path");
  LoopedGraph g(NumberedLabels(1, n));
  for (std::size_t v = 1; v < g.size(); ++v) g.AddEdge(v - 1, v);
  return g;
}

LoopedGraph StarGraph(int leaves) {
  RequireNonNegative(leaves, "star");
  LoopedGraph g(NumberedLabels(0, leaves));
  for (std::size_t v = 1; v < g.size(); ++v) g.AddEdge(0, v);
  return g;
}

LoopedGraph WindmillGraph(int n, int m) {
  if (n < 2 || m < 1) {
    throw Error(ErrorCode::kBadParams, "windmill needs n >= 2 and m >= 1");
  }
  std::vector<std::string> labels{"h"};
  for (int i = 1; i <= m; ++i) {
    for (int j = 1; j < n; ++j) {
      labels.push_back("b" + std::to_string(i) + "_" + std::to_string(j));
    }
  }
  LoopedGraph g(std::move(labels));
  const std::size_t blade = static_cast<std::size_t>(n - 1);
  for (std::size_t i = 0; i < static_cast<std::size_t>(m); ++i) {
    const std::size_t base = 1 + i * blade;
    for (std::size_t a = 0; a < blade; ++a) {
      g.AddEdge(0, base + a);
      for (std::size_t b = a + 1; b < blade; ++b) g.AddEdge(base + a, base + b);
    }
  }
  return g;
}

LoopedGraph RandomGraph(int n, double edge_prob, double loop_prob, Rng& rng) {
  RequireNonNegative(n, "random");
  if (!(edge_prob >= 0.0 && edge_prob <= 1.0) ||
      !(loop_prob >= 0.0 && loop_prob <= 1.0)) {
    throw Error(ErrorCode::kBadParams, "random graph probabilities must lie in [0, 1]");
  }
  LoopedGraph g(NumberedLabels(1, n));
  for (std::size_t u = 0; u < g.size(); ++u) {
    g.SetLoop(u, rng.Bernoulli(loop_prob));
    for (std::size_t v = u + 1; v < g.size(); ++v) {
      if (rng.Bernoulli(edge_prob)) g.AddEdge(u, v);
    }
  }
  return g;
}

namespace {

int IntegerParam(const std::vector<double>& params, std::size_t k,
                 std::string_view family) {
  const double x = params[k];
  if (!(std::isfinite(x) && x == std::floor(x) && std::fabs(x) < 1e6)) {
    throw Error(ErrorCode::kBadParams, std::string(family) + " parameter " +
                                           std::to_string(k + 1) +
                                           " must be an integer");
  }
  return static_cast<int>(x);
}

void RequireArity(const std::vector<double>& params, std::size_t arity,
                  std::string_view family) {
  if (params.size() != arity) {
    throw Error(ErrorCode::kBadParams, std::string(family) + " takes " +
                                           std::to_string(arity) + " parameters");
  }
}

}  // namespace

LoopedGraph GenerateGraph(std::string_view family,
                          const std::vector<double>& params, std::uint64_t seed) {
  if (family == "complete") {
    RequireArity(params, 1, family);
    return CompleteGraph(IntegerParam(params, 0, family));
  }
  if (family == "path") {
    RequireArity(params, 1, family);
    return PathGraph(IntegerParam(params, 0, family));
  }
  if (family == "star") {
    RequireArity(params, 1, family);
    return StarGraph(IntegerParam(params, 0, family));
  }
  if (family == "windmill") {
    RequireArity(params, 2, family);
    return WindmillGraph(IntegerParam(params, 0, family),
                         IntegerParam(params, 1, family));
  }
  if (family == "random") {
    RequireArity(params, 3, family);
    Rng rng = Rng(seed).Split("gen.random");
    return RandomGraph(IntegerParam(params, 0, family), params[1], params[2], rng);
  }
  throw Error(ErrorCode::kBadParams, "unknown family '" + std::string(family) + "'");
}

}  // namespace deltatwist
