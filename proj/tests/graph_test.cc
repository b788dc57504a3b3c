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

#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "deltatwist/error.h"
#include "deltatwist/graph.h"
#include "deltatwist/random.h"

namespace deltatwist {
namespace {

ErrorCode CodeOf(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::kIndexOutOfRange;
}

TEST(GraphTest, ParseAndSerialize) {
  const std::string text =
      "# comment\n"
      "vertices: a b c\n"
      "loops: c\n"
      "edge: a b\n"
      "edge: b c\n";
  const LoopedGraph g = ParseGraph(text);
  EXPECT_EQ(g.size(), 3u);
  EXPECT_TRUE(g.HasLoop(2));
  EXPECT_FALSE(g.HasLoop(0));
  EXPECT_TRUE(g.HasEdge(0, 1));
  EXPECT_FALSE(g.HasEdge(0, 2));
  EXPECT_EQ(g.EdgeCount(), 2u);
  EXPECT_FALSE(g.IsUnlooped());
  EXPECT_EQ(SerializeGraph(g), "vertices: a b c\nloops: c\nedge: a b\nedge: b c\n");
  EXPECT_EQ(ParseGraph(SerializeGraph(g)), g);
}

TEST(GraphTest, ParseErrors) {
  EXPECT_EQ(CodeOf([] { ParseGraph("edge: a b\n"); }),
            ErrorCode::kMissingVerticesLine);
  EXPECT_EQ(CodeOf([] { ParseGraph("vertices: a b\nedge: a c\n"); }),
            ErrorCode::kUnknownLabel);
  EXPECT_EQ(CodeOf([] { ParseGraph("vertices: a a\n"); }),
            ErrorCode::kDuplicateLabel);
  EXPECT_EQ(CodeOf([] { ParseGraph("vertices: a b\nedge: a b\nedge: b a\n"); }),
            ErrorCode::kDuplicateEdge);
  EXPECT_EQ(CodeOf([] { ParseGraph("vertices: a\nedge: a a\n"); }),
            ErrorCode::kSelfEdgeViaEdgeLine);
  EXPECT_EQ(CodeOf([] { ParseGraph("vertices: a\ncolour: a\n"); }),
            ErrorCode::kParseError);
}

TEST(GraphTest, AdjacencyMatrixCarriesLoopsOnDiagonal) {
  const LoopedGraph g = ParseGraph("vertices: a b\nloops: a\nedge: a b\n");
  EXPECT_EQ(AdjacencyMatrix(g).ToRows(),
            (std::vector<std::vector<int>>{{1, 1}, {1, 0}}));
}

TEST(GraphTest, LoopComplementAndDelete) {
  const LoopedGraph g = ParseGraph("vertices: a b c\nedge: a b\nedge: b c\n");
  const LoopedGraph plus = LoopComplement(g, "b");
  EXPECT_TRUE(plus.HasLoop(1));
  EXPECT_EQ(LoopComplement(plus, "b"), g);
  const LoopedGraph minus = DeleteVertex(g, "b");
  EXPECT_EQ(minus.labels(), (std::vector<std::string>{"a", "c"}));
  EXPECT_EQ(minus.EdgeCount(), 0u);
  EXPECT_EQ(CodeOf([&] { DeleteVertex(g, "z"); }), ErrorCode::kUnknownLabel);
}

TEST(GraphTest, OnePointJoinOfTwoEdges) {
  const LoopedGraph k2 = ParseGraph("vertices: u v\nedge: u v\n");
  const LoopedGraph other = ParseGraph("vertices: u w\nedge: u w\n");
  const LoopedGraph p3 = OnePointJoin(k2, "v", other, "u");
  EXPECT_EQ(p3.labels(), (std::vector<std::string>{"u", "v", "w"}));
  EXPECT_TRUE(p3.HasEdge(0, 1));
  EXPECT_TRUE(p3.HasEdge(1, 2));
  EXPECT_FALSE(p3.HasEdge(0, 2));
}

TEST(GraphTest, OnePointJoinRenamesCollisions) {
  const LoopedGraph k2 = ParseGraph("vertices: u v\nedge: u v\n");
  const LoopedGraph j = OnePointJoin(k2, "u", k2, "u");
  EXPECT_EQ(j.labels(), (std::vector<std::string>{"u", "v", "v_2"}));
  EXPECT_EQ(j.EdgeCount(), 2u);
  EXPECT_EQ(j.Neighbors(0).size(), 2u);
}

TEST(GraphTest, OnePointJoinNeedsMatchingLoopStatus) {
  const LoopedGraph a = ParseGraph("vertices: u\nloops: u\n");
  const LoopedGraph b = ParseGraph("vertices: x\n");
  EXPECT_EQ(CodeOf([&] { OnePointJoin(a, "u", b, "x"); }),
            ErrorCode::kLoopStatusMismatch);
}

TEST(GraphTest, DisjointUnion) {
  const LoopedGraph k2 = ParseGraph("vertices: u v\nloops: v\nedge: u v\n");
  const LoopedGraph g = DisjointUnion(k2, k2);
  EXPECT_EQ(g.size(), 4u);
  EXPECT_EQ(g.EdgeCount(), 2u);
  EXPECT_TRUE(g.HasLoop(3));
  EXPECT_FALSE(g.HasEdge(1, 2));
}

TEST(GraphTest, Families) {
  EXPECT_EQ(CompleteGraph(5).EdgeCount(), 10u);
  EXPECT_EQ(PathGraph(4).EdgeCount(), 3u);
  EXPECT_EQ(StarGraph(3).size(), 4u);
  const LoopedGraph w = WindmillGraph(3, 2);
  EXPECT_EQ(w.size(), 5u);
  EXPECT_EQ(w.EdgeCount(), 6u);
  EXPECT_EQ(WindmillGraph(4, 2).size(), 7u);
  EXPECT_EQ(CodeOf([] { WindmillGraph(1, 2); }), ErrorCode::kBadParams);
  EXPECT_EQ(CodeOf([] { GenerateGraph("complete", {}); }), ErrorCode::kBadParams);
  EXPECT_EQ(CodeOf([] { GenerateGraph("petersen", {3}); }), ErrorCode::kBadParams);
  EXPECT_EQ(GenerateGraph("complete", {4}), CompleteGraph(4));
}

TEST(GraphTest, RandomGraphIsSeeded) {
  Rng a(99);
  Rng b(99);
  EXPECT_EQ(RandomGraph(9, 0.5, 0.3, a), RandomGraph(9, 0.5, 0.3, b));
  EXPECT_EQ(GenerateGraph("random", {7, 0.4, 0.2}, 5),
            GenerateGraph("random", {7, 0.4, 0.2}, 5));
  Rng c(1);
  EXPECT_TRUE(RandomGraph(8, 0.5, 0.0, c).IsUnlooped());
}

TEST(RngTest, SplitStreamsAreStable) {
  const Rng root(42);
  Rng x = root.Split("join");
  Rng y = root.Split("join");
  EXPECT_EQ(x.Next(), y.Next());
  Rng z = root.Split("leaf");
  Rng w = root.Split("join");
  EXPECT_NE(z.Next(), w.Next());
  Rng r(3);
  for (int i = 0; i < 1000; ++i) {
    const int v = r.Between(-2, 2);
    EXPECT_GE(v, -2);
    EXPECT_LE(v, 2);
    EXPECT_LT(r.Below(7), 7u);
  }
}

}  // namespace
}  // namespace deltatwist
