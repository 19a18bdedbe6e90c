// Copyright 2026 The sierpack Authors
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

#include <algorithm>
#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "sierpack/graph.h"
#include "sierpack/graph_io.h"
#include "sierpack/packing_sets.h"
#include "sierpack/sierpinski.h"
#include "sierpack/suite/oracles.h"
#include "sierpack/tree_iso.h"

namespace sierpack {
namespace {

constexpr int kInf = DistanceMatrix::kUnreachable;

void ExpectWellFormed(const Graph& g) {
  int degree_sum = 0;
  for (Vertex u = 0; u < g.order(); ++u) {
    auto nb = g.neighbors(u);
    EXPECT_TRUE(std::is_sorted(nb.begin(), nb.end()));
    EXPECT_EQ(std::adjacent_find(nb.begin(), nb.end()), nb.end());
    for (Vertex v : nb) {
      EXPECT_NE(u, v);
      EXPECT_TRUE(g.adjacent(v, u));
    }
    degree_sum += g.degree(u);
  }
  EXPECT_EQ(degree_sum, 2 * g.size());
}

TEST(GraphTest, RejectsLoopsDuplicatesAndBadEndpoints) {
  EXPECT_THROW(Graph(3, {{0, 0}}), GraphError);
  EXPECT_THROW(Graph(3, {{0, 1}, {1, 0}}), GraphError);
  EXPECT_THROW(Graph(3, {{0, 3}}), GraphError);
}

TEST(GraphTest, Generators) {
  const Graph s = Star(3);
  EXPECT_EQ(s.order(), 4);
  for (auto [u, v] : s.edges()) EXPECT_EQ(u, 0);
  EXPECT_EQ(Path(1).order(), 1);
  EXPECT_EQ(Path(1).size(), 0);
  const Graph k3 = Complete(3);
  EXPECT_EQ(k3.size(), 3);
  EXPECT_TRUE(k3.adjacent(0, 2));
  for (const Graph& g : {Path(6), Star(5), Complete(6), Cycle(5)}) {
    ExpectWellFormed(g);
  }
}

TEST(DistancesTest, Examples) {
  EXPECT_EQ(Distances(Path(4))(0, 3), 3);
  const DistanceMatrix k5 = Distances(Complete(5));
  for (int u = 0; u < 5; ++u) {
    for (int v = 0; v < 5; ++v) EXPECT_EQ(k5(u, v), u == v ? 0 : 1);
  }
  const DistanceMatrix two(Graph(4, {{0, 1}, {2, 3}}));
  EXPECT_EQ(two(0, 2), kInf);
  EXPECT_EQ(two(1, 3), kInf);
}

TEST(DistancesTest, AgreesWithFloydAndSatisfiesMetricLaws) {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 40; ++t) {
    const Graph g = suite::RandomConnectedGraph(2 + t % 12, 0.25, rng);
    const DistanceMatrix d(g);
    const auto ref = suite::FloydDistances(g);
    const int n = g.order();
    for (int u = 0; u < n; ++u) {
      EXPECT_EQ(d(u, u), 0);
      for (int v = 0; v < n; ++v) {
        ASSERT_EQ(d(u, v), ref[u][v]);
        EXPECT_EQ(d(u, v), d(v, u));
        EXPECT_EQ(d(u, v) == 1, g.adjacent(u, v));
        for (int w = 0; w < n; ++w) EXPECT_LE(d(u, v), d(u, w) + d(w, v));
      }
    }
  }
}

TEST(DiameterTest, Examples) {
  // Sample instance K_5 ⊗_f K_4.
  const VertexMap f(4, {1, 3, 3, 0, 2});
  EXPECT_EQ(Diameter(SierpinskiProduct(Complete(5), Complete(4), f).graph()),
            3);
  EXPECT_EQ(Diameter(Complete(1)), 0);
  EXPECT_EQ(Diameter(Graph(2, {})), kInf);
}

// Double-BFS oracle: the eccentricity maximum computed pairwise from plain
// BFS rows.
int DoubleSweepDiameter(const Graph& g) {
  int best = 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    for (int x : BfsDistances(g, v)) best = std::max(best, x);
  }
  return best;
}

TEST(DiameterTest, K2ByCompleteMatchesBfsOracle) {
  for (int n = 2; n <= 5; ++n) {
    for (const VertexMap& f : EnumerateMaps(Complete(2), Complete(n))) {
      const Graph x = SierpinskiProduct(Complete(2), Complete(n), f).graph();
      EXPECT_EQ(Diameter(x), DoubleSweepDiameter(x));
      EXPECT_EQ(Diameter(x), 3) << f.ToString();
    }
  }
}

TEST(PackingSetsTest, Examples) {
  EXPECT_EQ(IndependenceNumber(Complete(6)), 1);
  EXPECT_EQ(IndependenceNumber(Path(5)), 3);
  const Graph c34 =
      SierpinskiProduct(Complete(3), Complete(4), VertexMap::Constant(3, 4, 0))
          .graph();
  EXPECT_EQ(IndependenceNumber(c34), suite::BruteForceDistanceSet(c34, 2));
  EXPECT_EQ(IndependenceNumber(c34), 3);
  for (const VertexMap& f : EnumerateMaps(Complete(3), Complete(4))) {
    EXPECT_EQ(
        TwoPackingNumber(SierpinskiProduct(Complete(3), Complete(4), f).graph()),
        3);
  }
  EXPECT_EQ(TwoPackingNumber(Complete(5)), 1);
  EXPECT_EQ(TwoPackingNumber(Star(6)), 1);
}

TEST(PackingSetsTest, SizeBound) {
  EXPECT_THROW(IndependenceNumber(Path(41)), SizeError);
  EXPECT_EQ(IndependenceNumber(Path(41), {.max_order = 50}), 21);
}

TEST(PackingSetsTest, MatchesSubsetOracleAndAlphaDominatesAlpha2) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 60; ++t) {
    const Graph g = suite::RandomConnectedGraph(1 + t % 14, 0.3, rng);
    const int a = IndependenceNumber(g), a2 = TwoPackingNumber(g);
    EXPECT_EQ(a, suite::BruteForceDistanceSet(g, 2));
    EXPECT_EQ(a2, suite::BruteForceDistanceSet(g, 3));
    EXPECT_GE(a, a2);
  }
}

TEST(TreeTest, IsTree) {
  EXPECT_TRUE(IsTree(Path(7)));
  EXPECT_FALSE(IsTree(Cycle(4)));
  EXPECT_FALSE(IsTree(Graph(4, {{0, 1}, {2, 3}})));
  std::mt19937_64 rng(3);
  for (int t = 0; t < 50; ++t) {
    const int n1 = 1 + t % 6, n2 = 1 + t % 5;
    const Graph t1 = suite::RandomTree(n1, rng), t2 = suite::RandomTree(n2, rng);
    const Graph x =
        SierpinskiProduct(t1, t2, VertexMap(n2, suite::RandomImage(n1, n2, rng)))
            .graph();
    EXPECT_EQ(x.size(), n1 * (n2 - 1) + (n1 - 1));
    EXPECT_TRUE(IsTree(x));
  }
}

TEST(TreeIsoTest, Examples) {
  EXPECT_TRUE(TreeIsomorphic(Path(5), Path(5)));
  EXPECT_FALSE(TreeIsomorphic(Star(4), Path(5)));
  EXPECT_THROW(TreeIsomorphic(Cycle(4), Path(4)), GraphError);
}

TEST(TreeIsoTest, EquivalenceUnderRelabeling) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 100; ++t) {
    const Graph tree = suite::RandomTree(1 + t % 16, rng);
    EXPECT_TRUE(TreeIsomorphic(tree, tree));
    std::vector<Vertex> perm(tree.order());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const Graph other = Relabel(tree, perm);
    EXPECT_TRUE(TreeIsomorphic(tree, other));
    EXPECT_TRUE(TreeIsomorphic(other, tree));
    EXPECT_EQ(CanonicalTreeCode(tree), CanonicalTreeCode(other));
  }
}

TEST(TreeIsoTest, AgreesWithReferenceOnAllSmallTrees) {
  for (int n = 1; n <= 8; ++n) {
    const auto trees = suite::FreeTrees(n);
    for (size_t i = 0; i < trees.size(); ++i) {
      for (size_t j = 0; j < trees.size(); ++j) {
        EXPECT_EQ(TreeIsomorphic(trees[i], trees[j]), i == j);
      }
    }
  }
}

TEST(TreeIsoTest, TwelveVertexRelabeling) {
  std::mt19937_64 rng(12);
  const Graph tree = suite::RandomTree(12, rng);
  std::vector<Vertex> p1(12), p2(12);
  std::iota(p1.begin(), p1.end(), 0);
  std::iota(p2.begin(), p2.end(), 0);
  std::shuffle(p1.begin(), p1.end(), rng);
  std::shuffle(p2.begin(), p2.end(), rng);
  EXPECT_TRUE(TreeIsomorphic(Relabel(tree, p1), Relabel(tree, p2)));
}

TEST(CoronaTest, OrderAndDegreeContract) {
  const Graph c = Corona(Path(2), 2);
  EXPECT_EQ(c.order(), 6);
  EXPECT_EQ(c.size(), 5);
  EXPECT_THROW(Corona(Path(3), 0), GraphError);
  for (int n = 1; n <= 6; ++n) {
    for (int p = 1; p <= 4; ++p) {
      const Graph base = n >= 3 ? Cycle(n) : Path(n);
      const Graph g = Corona(base, p);
      ASSERT_EQ(g.order(), n * (1 + p));
      for (Vertex v = 0; v < n; ++v) {
        EXPECT_EQ(g.degree(v), base.degree(v) + p);
        for (Vertex w : base.neighbors(v)) EXPECT_TRUE(g.adjacent(v, w));
      }
      for (Vertex v = n; v < g.order(); ++v) EXPECT_EQ(g.degree(v), 1);
    }
  }
}

TEST(GraphIoTest, EdgeListRoundTrip) {
  const std::string k2 = "2 1\n0 1\n";
  EXPECT_EQ(FormatEdgeList(ParseEdgeList(k2)), k2);
  EXPECT_THROW(ParseEdgeList("3 1\n0 3\n"), ParseError);
  EXPECT_THROW(ParseEdgeList("3 2\n0 1\n1 0\n"), ParseError);
  EXPECT_THROW(ParseEdgeList("3\n"), ParseError);
  EXPECT_THROW(ParseEdgeList("3 2\n0 1\n"), ParseError);
  std::mt19937_64 rng(9);
  for (int t = 0; t < 30; ++t) {
    const Graph g = suite::RandomConnectedGraph(1 + t, 0.2, rng);
    const std::string text = FormatEdgeList(g);
    EXPECT_EQ(FormatEdgeList(ParseEdgeList(text)), text);
    EXPECT_EQ(ParseGraph6(FormatGraph6(g)), g);
  }
}

TEST(GraphIoTest, Graph6DecodesByBitTable) {
  // "D?{": n = 'D' - 63 = 5; payload '?' = 000000, '{' = 111100 over the
  // column-major upper triangle (0,1) (0,2) (1,2) (0,3) (1,3) (2,3) (0,4)
  // (1,4) (2,4) (3,4).
  const std::vector<Edge> slots = {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3},
                                   {2, 3}, {0, 4}, {1, 4}, {2, 4}, {3, 4}};
  const std::string bits = "000000111100";
  std::vector<Edge> expected;
  for (size_t i = 0; i < slots.size(); ++i) {
    if (bits[i] == '1') expected.push_back(slots[i]);
  }
  const Graph g = ParseGraph("D?{");
  EXPECT_EQ(g.order(), 5);
  EXPECT_EQ(g.edges(), expected);
  EXPECT_EQ(g.degree(4), 4);
  EXPECT_EQ(FormatEdgeList(g), "5 4\n0 4\n1 4\n2 4\n3 4\n");
  EXPECT_EQ(FormatGraph6(g), "D?{");
}

TEST(GraphIoTest, AutoDetectAndDot) {
  EXPECT_EQ(ParseGraph("2 1\n0 1\n"), Path(2));
  EXPECT_EQ(ParseGraph(">>graph6<<D?{"), ParseGraph("D?{"));
  const std::string dot = FormatDot(Path(3));
  EXPECT_NE(dot.find("0 -- 1"), std::string::npos);
}

}  // namespace
}  // namespace sierpack
