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

// Packing colorings: c(u) = c(v) = l for u != v requires d(u, v) > l.
//
// The exact engine is a backtracking search for a packing coloring with
// colors in [k]. Each uncolored vertex keeps its set of still-feasible colors;
// assigning color l to v removes l from every vertex within distance l of v
// and the branch is abandoned as soon as some set becomes empty. The vertex
// with the fewest options is colored next (ties: higher degree, then lower
// index) and colors are tried in ascending order. A color l >= diam(G) can
// be used at most once, so all unused such colors are interchangeable and
// only the smallest is tried. On graphs of diameter <= 4 a counting bound
// (how many more vertices each color can still take) prunes further.

#ifndef SIERPACK_PACKING_H_
#define SIERPACK_PACKING_H_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "sierpack/graph.h"
#include "sierpack/packing_sets.h"

namespace sierpack {

// Colors are 1-based; k is the largest color present.
class PackingColoring {
 public:
  PackingColoring() = default;
  explicit PackingColoring(std::vector<int> colors);

  int order() const { return static_cast<int>(colors_.size()); }
  int k() const { return k_; }
  int operator[](Vertex v) const { return colors_[v]; }
  const std::vector<int>& colors() const { return colors_; }

  // Number of distinct colors in use.
  int NumDistinctColors() const;

  friend bool operator==(const PackingColoring&,
                         const PackingColoring&) = default;

 private:
  std::vector<int> colors_;
  int k_ = 0;
};

struct PackingViolation {
  Vertex u;
  Vertex v;
  int color;
  int distance;
};

struct VerifyResult {
  bool ok = true;
  std::optional<PackingViolation> violation;  // first violating pair
  explicit operator bool() const { return ok; }
};

// Throws GraphError when the coloring does not cover g or uses a color < 1.
// The reported violation is the lexicographically first pair (u < v).
VerifyResult VerifyPackingColoring(const Graph& g, const PackingColoring& c);
VerifyResult VerifyPackingColoring(const DistanceMatrix& d,
                                   const PackingColoring& c);

enum class SearchStatus { kSat, kUnsat, kUnknown };

const char* ToString(SearchStatus s);

struct SearchOptions {
  // Largest order accepted by the exact routines (SizeError above).
  int max_order = 40;
  // Abort a single decision search after this many nodes; 0 = unlimited.
  // Exceeding it yields kUnknown, never kUnsat.
  int64_t node_budget = 0;
};

struct DecisionResult {
  SearchStatus status = SearchStatus::kUnknown;
  std::optional<PackingColoring> coloring;  // set iff kSat
  int64_t nodes = 0;
};

struct ExactResult {
  SearchStatus status = SearchStatus::kUnknown;  // kSat when solved
  int value = 0;  // χ_ρ when solved, otherwise the best proven lower bound
  int upper_bound = 0;
  std::optional<PackingColoring> witness;  // optimal when solved
  int64_t nodes = 0;
};

// Shares one distance matrix across any number of decision calls.
class PackingSolver {
 public:
  explicit PackingSolver(const Graph& g, SearchOptions options = {});

  const Graph& graph() const { return graph_; }
  const DistanceMatrix& distances() const { return dist_; }
  int diameter() const { return diameter_; }

  // Packing coloring with colors in [k], or a proof that none exists.
  DecisionResult Decide(int k) const;

  // As Decide, with some colors fixed in advance: precolored[v] > 0 pins v,
  // 0 leaves it free.
  DecisionResult Complete(int k, std::span<const int> precolored) const;

  // Ascending decision calls from max(LowerBound(), known_lower_bound) until
  // the first success.
  ExactResult Exact(int known_lower_bound = 0) const;

  // max(1 or 2, closed-neighbourhood bound, 3 when diam >= 3, and
  // 2 + n - α - α₂ when diam <= 3).
  int LowerBound() const;

 private:
  Graph graph_;
  SearchOptions options_;
  DistanceMatrix dist_;
  int diameter_;
};

DecisionResult ChiRhoDecision(const Graph& g, int k,
                              const SearchOptions& options = {});
ExactResult ChiRhoExact(const Graph& g, const SearchOptions& options = {});

// Greedy packing coloring: vertices by descending degree (then index), each
// takes the smallest feasible color. Always valid.
PackingColoring GreedyPackingColoring(const Graph& g);
int GreedyUpperBound(const Graph& g);

// Turns `candidate` (colors >= 1, possibly violating) into a valid packing
// coloring with colors in [k]: vertices near a violation (or above k) are
// uncolored within radius 2, 4, 8 and finally everywhere, and each time the
// rest is completed by exact search. Returns nullopt when every attempt is
// unsatisfiable or runs out of `node_budget` nodes (0 = unlimited).
std::optional<PackingColoring> RepairPackingColoring(
    const Graph& g, const std::vector<int>& candidate, int k,
    int64_t node_budget = 0);

}  // namespace sierpack

#endif  // SIERPACK_PACKING_H_
