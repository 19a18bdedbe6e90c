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

// Recognition of Sierpiński products of two trees.
//
// For each split n(X) = n1 * n2 the fibers are peeled one at a time: a cut
// edge leaving a component of order n2 must be the connecting edge of a leaf
// of the base tree, so its small side is a whole fiber. All fibers must be
// isomorphic to the first one. The base tree and the connecting edges then
// determine f up to a consistency problem: fiber x must be isomorphic to H
// by a map sending f(y) to the endpoint of the edge towards y, for every
// neighbor y at once. That problem is solved by dynamic programming over the
// base tree.

#ifndef SIERPACK_RECOGNIZE_H_
#define SIERPACK_RECOGNIZE_H_

#include <optional>
#include <string>
#include <vector>

#include "sierpack/graph.h"
#include "sierpack/sierpinski.h"

namespace sierpack {

// Cut edges of x whose removal leaves components of orders n2 and
// n(x) - n2. Requires x connected (GraphError otherwise).
std::vector<Edge> PendantSplitEdges(const Graph& x, int n2);

struct PeelStep {
  Vertex base_vertex;  // the fiber removed at this step
  Edge edge;           // (endpoint inside that fiber, endpoint outside)
};

struct PeelTrace {
  // fibers[b]: the vertices of x forming base vertex b, ascending. Base
  // vertices are numbered in peel order; the last one is never peeled.
  std::vector<std::vector<Vertex>> fibers;
  std::vector<PeelStep> steps;
};

struct Factorization {
  Graph base;
  Graph fiber;
  VertexMap map;
  PeelTrace peel_trace;
};

enum class RecognitionStatus { kFactored, kNotAProduct };

const char* ToString(RecognitionStatus s);

struct SplitDiagnostic {
  int n1;
  int n2;
  std::string reason;  // empty when the split succeeded
};

struct RecognitionOutcome {
  RecognitionStatus status = RecognitionStatus::kNotAProduct;
  std::vector<Factorization> factorizations;
  std::vector<SplitDiagnostic> diagnostics;
};

// Lowest f (lexicographically, by base vertex) with every connecting edge
// of `trace` equal to (b, f(b'))(b', f(b)) under some isomorphisms between
// `fiber` and the peeled fibers. nullopt when no such f exists.
std::optional<VertexMap> ReconstructMap(const Graph& x, const PeelTrace& trace,
                                        const Graph& base, const Graph& fiber);

// With exhaustive = false the first candidate edge (lexicographic) is
// peeled at every step; with exhaustive = true all peel orders are
// explored before a split is rejected. Every returned factorization has
// been rebuilt and checked isomorphic to x.
RecognitionOutcome RecognizeTreeProduct(const Graph& x,
                                        bool exhaustive = false);

}  // namespace sierpack

#endif  // SIERPACK_RECOGNIZE_H_
