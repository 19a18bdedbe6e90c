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

#include <random>

#include <gtest/gtest.h>

#include "sierpack/families.h"
#include "sierpack/packing.h"
#include "sierpack/packing_sets.h"
#include "sierpack/sierpinski.h"
#include "sierpack/suite/oracles.h"

namespace sierpack {
namespace {

TEST(VerifyTest, PathExamples) {
  EXPECT_TRUE(VerifyPackingColoring(Path(4), PackingColoring({1, 2, 1, 3})).ok);
  const VerifyResult bad =
      VerifyPackingColoring(Path(4), PackingColoring({1, 2, 1, 2}));
  ASSERT_FALSE(bad.ok);
  ASSERT_TRUE(bad.violation);
  EXPECT_EQ(bad.violation->u, 1);
  EXPECT_EQ(bad.violation->v, 3);
  EXPECT_EQ(bad.violation->color, 2);
  EXPECT_EQ(bad.violation->distance, 2);
  EXPECT_THROW(VerifyPackingColoring(Path(4), PackingColoring({1, 2, 1})),
               GraphError);
  EXPECT_THROW(VerifyPackingColoring(Path(2), PackingColoring({0, 1})),
               GraphError);
}

TEST(VerifyTest, DrawnPathStarColoring) {
  // Colors as drawn for P_14 ⊗_g K_{1,3}; fiber vertex 0 is the center.
  std::vector<int> colors;
  for (int i = 0; i < 14; ++i) {
    colors.push_back(i % 4 == 0 ? 3 : 2);
    colors.push_back(i == 2 || i == 10 ? 3 : 1);
    colors.push_back(i == 6 ? 3 : 1);
    colors.push_back(1);
  }
  const VertexMap g(4, {0, 1, 3, 1, 0, 2, 3, 2, 0, 1, 3, 1, 0, 2});
  EXPECT_EQ(g, PathStarMinMap(14, 3));
  const Graph x = SierpinskiProduct(Path(14), Star(3), g).graph();
  EXPECT_TRUE(VerifyPackingColoring(x, PackingColoring(colors)).ok);
}

TEST(DecisionTest, Examples) {
  EXPECT_EQ(ChiRhoDecision(Path(4), 2).status, SearchStatus::kUnsat);
  const DecisionResult three = ChiRhoDecision(Path(4), 3);
  ASSERT_EQ(three.status, SearchStatus::kSat);
  EXPECT_TRUE(VerifyPackingColoring(Path(4), *three.coloring).ok);
  EXPECT_LE(three.coloring->k(), 3);
  EXPECT_EQ(ChiRhoDecision(Corona(Path(5), 2), 4).status, SearchStatus::kUnsat);
}

TEST(DecisionTest, BudgetIsNotUnsat) {
  const DecisionResult r =
      ChiRhoDecision(Corona(Path(12), 2), 5, {.node_budget = 10});
  EXPECT_EQ(r.status, SearchStatus::kUnknown);
  EXPECT_FALSE(r.coloring);
  const ExactResult e = ChiRhoExact(Corona(Path(12), 2), {.node_budget = 10});
  EXPECT_EQ(e.status, SearchStatus::kUnknown);
  EXPECT_LE(e.value, 6);
  EXPECT_GE(e.upper_bound, 6);
}

TEST(DecisionTest, SizeBound) {
  EXPECT_THROW(ChiRhoDecision(Path(41), 3), SizeError);
  EXPECT_EQ(ChiRhoDecision(Path(41), 3, {.max_order = 41}).status,
            SearchStatus::kSat);
}

TEST(ExactTest, Examples) {
  EXPECT_EQ(ChiRhoExact(Complete(5)).value, 5);
  const Graph c34 =
      SierpinskiProduct(Complete(3), Complete(4), VertexMap::Constant(3, 4, 0))
          .graph();
  EXPECT_EQ(ChiRhoExact(c34).value, 8);
  const ExactResult corona = ChiRhoExact(Corona(Path(12), 2));
  EXPECT_EQ(corona.status, SearchStatus::kSat);
  EXPECT_EQ(corona.value, 6);
  EXPECT_EQ(ChiRhoExact(Complete(1)).value, 1);
}

TEST(ExactTest, SoundAndMinimalOnRandomGraphs) {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 60; ++t) {
    const Graph g = suite::RandomConnectedGraph(2 + t % 13, 0.25, rng);
    PackingSolver solver(g);
    const ExactResult e = solver.Exact();
    ASSERT_EQ(e.status, SearchStatus::kSat);
    ASSERT_TRUE(e.witness);
    EXPECT_TRUE(VerifyPackingColoring(g, *e.witness).ok);
    EXPECT_EQ(e.witness->k(), e.value);
    EXPECT_EQ(solver.Decide(e.value - 1).status, SearchStatus::kUnsat);
    EXPECT_LE(solver.LowerBound(), e.value);
    EXPECT_EQ(e.value, suite::BacktrackChiRho(g));
  }
}

// Every labeled connected graph on up to 5 vertices.
TEST(ExactTest, MatchesNaiveOracleOnAllSmallGraphs) {
  int checked = 0;
  for (int n = 1; n <= 5; ++n) {
    std::vector<Edge> slots;
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) slots.emplace_back(u, v);
    }
    for (uint32_t mask = 0; mask < (1u << slots.size()); ++mask) {
      std::vector<Edge> edges;
      for (size_t i = 0; i < slots.size(); ++i) {
        if (mask >> i & 1) edges.push_back(slots[i]);
      }
      const Graph g(n, edges);
      if (!IsConnected(g)) continue;
      ASSERT_EQ(ChiRhoExact(g).value, suite::NaiveChiRho(g));
      ++checked;
    }
  }
  EXPECT_EQ(checked, 1 + 1 + 4 + 38 + 728);
}

TEST(ExactTest, MatchesNaiveOracleOnRandomOrderSixAndSeven) {
  std::mt19937_64 rng(67);
  for (int t = 0; t < 60; ++t) {
    const Graph g = suite::RandomConnectedGraph(6 + t % 2, 0.3, rng);
    EXPECT_EQ(ChiRhoExact(g).value, suite::NaiveChiRho(g));
  }
}

TEST(LowerBoundTest, CountingLawOnCompletePairs) {
  for (int m = 3; m <= 4; ++m) {
    for (int n = 3; n <= 4; ++n) {
      for (const VertexMap& f : EnumerateMaps(Complete(m), Complete(n))) {
        const Graph x = SierpinskiProduct(Complete(m), Complete(n), f).graph();
        PackingSolver solver(x);
        ASSERT_EQ(solver.diameter(), 3);
        const int a = suite::BruteForceDistanceSet(x, 2);
        const int a2 = suite::BruteForceDistanceSet(x, 3);
        const int law = 2 + x.order() - a - a2;
        const int chi = solver.Exact().value;
        EXPECT_GE(chi, law);
        EXPECT_GE(solver.LowerBound(), law);
        EXPECT_GE(chi, m * n - 2 * m + 2);
      }
    }
  }
}

TEST(GreedyTest, Examples) {
  EXPECT_EQ(GreedyUpperBound(Complete(4)), 4);
  EXPECT_EQ(GreedyUpperBound(Path(2)), 2);
  std::mt19937_64 rng(33);
  for (int t = 0; t < 100; ++t) {
    const Graph g = suite::RandomConnectedGraph(1 + t % 14, 0.3, rng);
    const PackingColoring c = GreedyPackingColoring(g);
    EXPECT_TRUE(VerifyPackingColoring(g, c).ok);
    EXPECT_EQ(GreedyUpperBound(g), c.k());
    EXPECT_GE(c.k(), ChiRhoExact(g).value);
  }
}

TEST(CompleteTest, RespectsPrecoloring) {
  PackingSolver solver(Path(6));
  const std::vector<int> fixed = {0, 0, 2, 0, 0, 0};
  const DecisionResult r = solver.Complete(3, fixed);
  ASSERT_EQ(r.status, SearchStatus::kSat);
  EXPECT_EQ((*r.coloring)[2], 2);
  EXPECT_TRUE(VerifyPackingColoring(Path(6), *r.coloring).ok);
  const std::vector<int> clash = {1, 1, 0, 0, 0, 0};
  EXPECT_EQ(solver.Complete(3, clash).status, SearchStatus::kUnsat);
}

TEST(RepairTest, FixesCorruptedColorings) {
  std::mt19937_64 rng(44);
  for (int t = 0; t < 30; ++t) {
    const Graph g = suite::RandomConnectedGraph(8 + t % 10, 0.2, rng);
    const ExactResult e = ChiRhoExact(g);
    std::vector<int> colors = e.witness->colors();
    std::uniform_int_distribution<int> pick(0, g.order() - 1);
    colors[pick(rng)] = 1;
    colors[pick(rng)] = 1;
    auto fixed = RepairPackingColoring(g, colors, e.value);
    ASSERT_TRUE(fixed);
    EXPECT_TRUE(VerifyPackingColoring(g, *fixed).ok);
    EXPECT_LE(fixed->k(), e.value);
    EXPECT_FALSE(RepairPackingColoring(g, colors, e.value - 1));
  }
}

}  // namespace
}  // namespace sierpack
