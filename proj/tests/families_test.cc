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

#include <map>
#include <numeric>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "sierpack/families.h"
#include "sierpack/packing.h"
#include "sierpack/sierpinski.h"
#include "sierpack/suite/oracles.h"
#include "sierpack/tree_iso.h"

namespace sierpack {
namespace {

std::set<int> ColorSet(const PackingColoring& c) {
  return {c.colors().begin(), c.colors().end()};
}

bool Valid(const Construction& c) {
  return c.ok() && VerifyPackingColoring(c.product.graph(), c.coloring).ok;
}

TEST(CompletePairValueTest, Examples) {
  EXPECT_EQ(CompletePairValue(3, 3, ChiMode::kMin).value(), 5);
  EXPECT_EQ(CompletePairValue(4, 3, ChiMode::kMax).value(), 7);
  EXPECT_EQ(CompletePairValue(3, 4, ChiMode::kMax).value(), 8);
  EXPECT_EQ(CompletePairValue(3, 3, ChiMode::kMin).source, "complete_pair.min");
  EXPECT_THROW(CompletePairValue(2, 4, ChiMode::kMin), std::invalid_argument);
}

TEST(CompletePairValueTest, MatchesFullEnumeration) {
  for (int m = 3; m <= 4; ++m) {
    for (int n = 3; n <= 4; ++n) {
      int lo = 1 << 30, hi = 0;
      for (const VertexMap& f : EnumerateMaps(Complete(m), Complete(n))) {
        const int v =
            ChiRhoExact(SierpinskiProduct(Complete(m), Complete(n), f).graph())
                .value;
        lo = std::min(lo, v);
        hi = std::max(hi, v);
      }
      EXPECT_EQ(lo, CompletePairValue(m, n, ChiMode::kMin).value());
      EXPECT_EQ(hi, CompletePairValue(m, n, ChiMode::kMax).value());
    }
  }
}

TEST(CompleteByK2Test, Examples) {
  EXPECT_EQ(CompleteByK2Value(8, 5, 3).value(), 10);
  EXPECT_EQ(CompleteByK2Value(4, 2, 2).value(), 5);
  EXPECT_EQ(CompleteByK2Value(3, 3, 0).value(), 4);
  EXPECT_THROW(CompleteByK2Value(8, 3, 5), std::invalid_argument);
  EXPECT_THROW(CompleteByK2Value(8, 5, 2), std::invalid_argument);
  const VertexMap f(2, {1, 1, 1, 0, 0, 0, 0, 0});
  EXPECT_EQ(CompleteByK2ValueForMap(f).value(), 10);
}

int Binomial(int n, int k) {
  int r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

TEST(CompleteByK2Test, MultisetMatchesPartitionCounting) {
  for (int m = 3; m <= 5; ++m) {
    std::map<int, int> observed, predicted;
    for (const VertexMap& f : EnumerateMaps(Complete(m), Complete(2))) {
      ++observed[ChiRhoExact(SierpinskiProduct(Complete(m), Complete(2), f)
                                 .graph())
                     .value];
    }
    for (int m2 = 0; 2 * m2 <= m; ++m2) {
      const int m1 = m - m2;
      const int maps = Binomial(m, m2) * (m1 == m2 ? 1 : 2);
      predicted[CompleteByK2Value(m, m1, m2).value()] += maps;
    }
    EXPECT_EQ(observed, predicted) << "m=" << m;
  }
}

TEST(K2SpecialTest, StatedValues) {
  EXPECT_EQ(K2SpecialValue(2, K2Side::kBase, ChiMode::kMin).value(), 3);
  EXPECT_EQ(K2SpecialValue(2, K2Side::kBase, ChiMode::kMax).value(), 3);
  EXPECT_EQ(K2SpecialValue(4, K2Side::kFiber, ChiMode::kMin).value(), 5);
  EXPECT_EQ(K2SpecialValue(4, K2Side::kFiber, ChiMode::kMax).value(), 5);
  EXPECT_EQ(K2SpecialValue(3, K2Side::kFiber, ChiMode::kMax).source,
            "k2_fiber.stated.max");
  EXPECT_THROW(K2SpecialValue(2, K2Side::kFiber, ChiMode::kMin),
               std::invalid_argument);
}

// Computed ground truth for a K_2 base, checked by two solver paths.
TEST(K2SpecialTest, ComputedBaseValues) {
  const std::map<int, int> expected = {{2, 3}, {3, 4}, {4, 6}, {5, 8}};
  for (auto [n, value] : expected) {
    for (const VertexMap& f : EnumerateMaps(Complete(2), Complete(n))) {
      const Graph x = SierpinskiProduct(Complete(2), Complete(n), f).graph();
      EXPECT_EQ(ChiRhoExact(x).value, value);
      EXPECT_EQ(suite::BacktrackChiRho(x), value);
    }
  }
}

TEST(K2SpecialTest, ComputedFiberMaxAtThree) {
  const ChiResult r = SierpinskiChi(Complete(3), Complete(2), ChiMode::kMax);
  EXPECT_EQ(r.value, 4);
}

TEST(CoronaValueTest, Tables) {
  EXPECT_EQ(CoronaValue(5, 2).value(), 5);
  EXPECT_EQ(CoronaValue(9, 3).value(), 6);
  EXPECT_EQ(CoronaValue(35, 4).value(), 7);
  EXPECT_EQ(CoronaValue(34, 4).value(), 6);
  EXPECT_EQ(CoronaValue(12, 2).value(), 6);
  EXPECT_THROW(CoronaValue(3, 1), std::invalid_argument);
  EXPECT_EQ(ChiRhoExact(Corona(Path(3), 3)).value, 4);
  EXPECT_EQ(ChiRhoExact(Corona(Path(1), 4)).value, 2);
}

TEST(PathPathTest, Examples) {
  const Construction a = PathPathMin(3, 3);
  EXPECT_TRUE(TreeIsomorphic(a.product.graph(), Path(9)));
  EXPECT_TRUE(Valid(a));
  EXPECT_EQ(a.coloring.k(), 3);
  EXPECT_TRUE(TreeIsomorphic(PathPathMin(4, 5).product.graph(), Path(20)));
  const Construction c = PathPathMin(2, 2);
  EXPECT_TRUE(TreeIsomorphic(c.product.graph(), Path(4)));
  EXPECT_EQ(ChiRhoExact(c.product.graph()).value, 3);
  // Endpoint by i mod 4 (1-based i): 1, 2 -> first; 3, 0 -> last.
  EXPECT_EQ(PathPathMinMap(6, 4).image(),
            (std::vector<Vertex>{0, 0, 3, 3, 0, 0}));
}

TEST(PathPathTest, ProductIsAPath) {
  for (int m = 2; m <= 8; ++m) {
    for (int n = 2; n <= 8; ++n) {
      const Construction c = PathPathMin(m, n);
      const Graph& x = c.product.graph();
      EXPECT_EQ(x.order(), m * n);
      EXPECT_TRUE(IsConnected(x));
      EXPECT_LE(x.max_degree(), 2);
      EXPECT_TRUE(Valid(c));
      EXPECT_EQ(c.coloring.k(), 3);
    }
  }
}

TEST(SpineTest, Examples) {
  ProductGraph small(Path(2), Path(3), VertexMap::Constant(2, 3, 0));
  const SpineDecomposition d = SpineDecompose(small);
  EXPECT_EQ(CheckSpineDecomposition(small.graph(), d), "");
  // The connecting edge (0,0)(1,0) lies on the spine.
  bool covered = false;
  for (size_t i = 0; i + 1 < d.spine.size(); ++i) {
    covered |= (d.spine[i] == 0 && d.spine[i + 1] == 3) ||
               (d.spine[i] == 3 && d.spine[i + 1] == 0);
  }
  EXPECT_TRUE(covered);

  ProductGraph line(Path(3), Path(3), PathPathMinMap(3, 3));
  const SpineDecomposition whole = SpineDecompose(line);
  EXPECT_EQ(CheckSpineDecomposition(line.graph(), whole), "");
  size_t covered_vertices = whole.spine.size();
  for (const auto& bs : whole.branches) {
    for (const auto& b : bs) covered_vertices += b.size();
  }
  EXPECT_EQ(covered_vertices, 9u);
  EXPECT_THROW(SpineDecompose(ProductGraph(Star(3), Path(3),
                                           VertexMap::Constant(4, 3, 0))),
               GraphError);
}

TEST(SpineTest, RandomProductsAreInClassT) {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 100; ++t) {
    const int m = 2 + t % 11, n = 2 + (t / 11) % 9;
    ProductGraph p(Path(m), Path(n),
                   VertexMap(n, suite::RandomImage(m, n, rng)));
    const SpineDecomposition d = SpineDecompose(p);
    EXPECT_EQ(CheckSpineDecomposition(p.graph(), d), "");
    EXPECT_LE(p.graph().max_degree(), 4);
    std::vector<int> seen(p.graph().order(), 0);
    for (Vertex v : d.spine) ++seen[v];
    for (const auto& bs : d.branches) {
      EXPECT_LE(bs.size(), 2u);
      for (const auto& b : bs) {
        for (Vertex v : b) ++seen[v];
      }
    }
    for (int s : seen) EXPECT_EQ(s, 1);
  }
}

TEST(ClassTTest, BareSpine) {
  SpineDecomposition d;
  d.order = 16;
  d.spine.resize(16);
  std::iota(d.spine.begin(), d.spine.end(), 0);
  d.branches.resize(16);
  const PackingColoring c = ColorClassT(d);
  const std::vector<int> period = {1, 4, 1, 5, 1, 6, 1, 7};
  for (int i = 0; i < 16; ++i) EXPECT_EQ(c[i], period[i % 8]);
  EXPECT_TRUE(VerifyPackingColoring(Path(16), c).ok);
}

TEST(ClassTTest, SpiderWithTwoLongLegs) {
  std::vector<Edge> edges = {{0, 1}, {0, 6}};
  for (int v = 1; v < 5; ++v) edges.emplace_back(v, v + 1);
  for (int v = 6; v < 10; ++v) edges.emplace_back(v, v + 1);
  const Graph spider(11, edges);
  SpineDecomposition d{11, {0}, {{{1, 2, 3, 4, 5}, {6, 7, 8, 9, 10}}}};
  EXPECT_EQ(CheckSpineDecomposition(spider, d), "");
  const PackingColoring c = ColorClassT(d);
  EXPECT_TRUE(VerifyPackingColoring(spider, c).ok);
  EXPECT_LE(c.k(), 7);
  SpineDecomposition broken{11, {0}, {{{1, 2, 3, 4, 5}, {5, 7, 8, 9, 10}}}};
  EXPECT_NE(CheckSpineDecomposition(spider, broken), "");
  EXPECT_THROW(ColorClassT(broken), GraphError);
}

TEST(ClassTTest, AdjacentDoubleBranches) {
  // P_m ⊗ P_3 with every map at the middle vertex is P_m ⊙ 2K_1: every
  // spine vertex carries two branches.
  for (int m = 2; m <= 12; ++m) {
    ProductGraph p(Path(m), Path(3), VertexMap::Constant(m, 3, 1));
    const PackingColoring c = ColorClassT(SpineDecompose(p));
    EXPECT_TRUE(VerifyPackingColoring(p.graph(), c).ok) << m;
    EXPECT_LE(c.k(), 7);
  }
}

TEST(ClassTTest, TwelveByFiveSweep) {
  std::mt19937_64 rng(125);
  for (int t = 0; t < 50; ++t) {
    ProductGraph p(Path(12), Path(5),
                   VertexMap(5, suite::RandomImage(12, 5, rng)));
    const PackingColoring c = ColorClassT(SpineDecompose(p));
    EXPECT_TRUE(VerifyPackingColoring(p.graph(), c).ok);
    EXPECT_LE(c.k(), 7);
  }
}

TEST(StarPathTest, MinConstruction) {
  const Construction c = StarPathColoring(3, 4, VertexMap::Constant(4, 4, 0),
                                          ConstructionMode::kMin);
  EXPECT_TRUE(Valid(c));
  EXPECT_EQ(ColorSet(c.coloring), (std::set<int>{1, 2, 3}));
  EXPECT_EQ(c.coloring[0], 2);  // the center of the center fiber
  EXPECT_THROW(StarPathColoring(3, 4, VertexMap::Constant(4, 4, 1),
                                ConstructionMode::kMin),
               std::invalid_argument);
  for (int m = 3; m <= 8; ++m) {
    for (int n = 2; n <= 8; ++n) {
      const Construction k = StarPathColoring(
          m, n, VertexMap::Constant(m + 1, n, 0), ConstructionMode::kMin);
      EXPECT_TRUE(Valid(k));
      EXPECT_EQ(ColorSet(k.coloring), (std::set<int>{1, 2, 3}));
    }
  }
}

TEST(StarPathTest, MaxBoundConstruction) {
  std::mt19937_64 rng(56);
  for (int t = 0; t < 40; ++t) {
    const VertexMap f(6, suite::RandomImage(6, 6, rng));
    const Construction c =
        StarPathColoring(5, 6, f, ConstructionMode::kMaxBound);
    EXPECT_TRUE(Valid(c)) << f.ToString();
    EXPECT_LE(c.coloring.k(), 7);
  }
  // Leaf fibers hanging by a path end take the pattern unchanged.
  const Construction end = StarPathColoring(
      4, 5, VertexMap(5, {4, 0, 0, 0, 0}), ConstructionMode::kMaxBound);
  EXPECT_EQ(end.status, ConstructionStatus::kVerified);
}

TEST(StarPathTest, ContainsTheCoronaAsInducedSubgraph) {
  // K_{1,25} ⊗_f P_12 with f(u_{2i}) = f(u_{2i+1}) = i; leaf u_j is base
  // vertex j - 1.
  std::vector<Vertex> image(26, 0);
  for (int i = 1; i <= 12; ++i) {
    image[2 * i - 1] = i - 1;
    image[2 * i] = i - 1;
  }
  ProductGraph p(Star(25), Path(12), VertexMap(12, image));
  std::vector<Vertex> keep;
  for (Vertex h = 0; h < 12; ++h) keep.push_back(p.vertex_of(0, h));
  for (Vertex j = 1; j <= 24; ++j) keep.push_back(p.vertex_of(j, image[0]));
  const Graph sub = InducedSubgraph(p.graph(), keep);
  EXPECT_TRUE(TreeIsomorphic(sub, Corona(Path(12), 2)));
  const ExactResult e = ChiRhoExact(sub);
  EXPECT_EQ(e.status, SearchStatus::kSat);
  EXPECT_EQ(e.value, 6);
}

TEST(PathStarTest, MinMapAndDrawnInstance) {
  EXPECT_EQ(PathStarMinMap(14, 3).image(),
            (std::vector<Vertex>{0, 1, 3, 1, 0, 2, 3, 2, 0, 1, 3, 1, 0, 2}));
  const Construction c =
      PathStarColoring(14, 3, PathStarMinMap(14, 3), ConstructionMode::kMin);
  EXPECT_TRUE(Valid(c));
  EXPECT_EQ(c.coloring.k(), 3);
  for (int m = 2; m <= 30; ++m) {
    for (int n = 3; n <= 6; ++n) {
      const Construction k =
          PathStarColoring(m, n, PathStarMinMap(m, n), ConstructionMode::kMin);
      EXPECT_TRUE(Valid(k)) << m << " " << n;
      EXPECT_LE(k.coloring.k(), 3);
    }
  }
}

TEST(PathStarTest, PatternShape) {
  const auto& pattern = PathStarPattern();
  ASSERT_EQ(pattern.size(), 64u);
  EXPECT_EQ(std::vector<int>(pattern.begin(), pattern.begin() + 8),
            (std::vector<int>{3, 4, 7, 5, 3, 6, 4, 9}));
  EXPECT_EQ(*std::max_element(pattern.begin(), pattern.end()), 9);
}

TEST(PathStarTest, MaxBoundConstruction) {
  std::mt19937_64 rng(104);
  for (int t = 0; t < 40; ++t) {
    const VertexMap f(5, suite::RandomImage(10, 5, rng));
    const Construction c =
        PathStarColoring(10, 4, f, ConstructionMode::kMaxBound);
    EXPECT_TRUE(Valid(c)) << f.ToString();
    EXPECT_LE(c.coloring.k(), 9);
  }
  for (const VertexMap& f : EnumerateMaps(Path(2), Star(3))) {
    EXPECT_TRUE(
        Valid(PathStarColoring(2, 3, f, ConstructionMode::kMaxBound)));
  }
}

TEST(PathStarTest, LongPathNeedsCyclicExtension) {
  std::vector<Vertex> image(30);
  for (int i = 0; i < 30; ++i) image[i] = 1 + i % 3;
  const VertexMap f(4, image);
  EXPECT_THROW(
      PathStarColoring(30, 3, f, ConstructionMode::kMaxBound, false),
      std::out_of_range);
  const Construction c = PathStarColoring(30, 3, f, ConstructionMode::kMaxBound);
  if (c.ok()) {
    EXPECT_TRUE(Valid(c));
  } else {
    EXPECT_EQ(c.status, ConstructionStatus::kOutOfRange);
  }
}

TEST(StarStarTest, ValuesAndConstructions) {
  EXPECT_EQ(StarStarValue(3, 3, ChiMode::kMin).value(), 3);
  const FamilyValue hi = StarStarValue(4, 6, ChiMode::kMax);
  EXPECT_EQ(hi.kind, ValueKind::kInterval);
  EXPECT_EQ(hi.lo, 6);
  EXPECT_EQ(hi.hi, 8);
  const Construction none = StarStarColoring(3, 3);
  EXPECT_TRUE(Valid(none));
  EXPECT_EQ(ColorSet(none.coloring), (std::set<int>{1, 2, 3}));
  // f(u_1) is the fiber center.
  const Construction case2 =
      StarStarColoring(4, 3, VertexMap(4, {0, 1, 2, 3, 1}));
  EXPECT_TRUE(Valid(case2));
  EXPECT_LE(case2.coloring.k(), 6);
  // f(u_1) is a leaf and f misses a leaf.
  const Construction case1 = StarStarColoring(3, 4, VertexMap(5, {1, 1, 2, 0}));
  EXPECT_TRUE(Valid(case1));
  EXPECT_LE(case1.coloring.k(), 6);
  for (const VertexMap& f : EnumerateMaps(Star(3), Star(5))) {
    const Construction c = StarStarColoring(3, 5, f);
    EXPECT_TRUE(Valid(c)) << f.ToString();
    EXPECT_LE(c.coloring.k(), 7);
  }
}

}  // namespace
}  // namespace sierpack
