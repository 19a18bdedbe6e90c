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

// Sierpiński products G ⊗_f H.
//
// Vertex (g, h) of the product has index g * n(H) + h. Every fiber gH is a
// copy of H (type-1 edges), and every base edge gg' contributes the single
// connecting edge (g, f(g'))(g', f(g)) (type-2).

#ifndef SIERPACK_SIERPINSKI_H_
#define SIERPACK_SIERPINSKI_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sierpack/graph.h"
#include "sierpack/packing.h"

namespace sierpack {

// f : V(G) -> V(H). Text form: "n_base n_fiber: i0 i1 ... i_{n_base-1}".
class VertexMap {
 public:
  VertexMap() = default;
  // Throws GraphError when an image is outside [0, fiber_order).
  VertexMap(int fiber_order, std::vector<Vertex> image);

  static VertexMap Constant(int base_order, int fiber_order, Vertex value);
  // Throws ParseError.
  static VertexMap Parse(std::string_view text);

  int base_order() const { return static_cast<int>(image_.size()); }
  int fiber_order() const { return fiber_order_; }
  Vertex operator[](Vertex g) const { return image_[g]; }
  const std::vector<Vertex>& image() const { return image_; }

  std::string ToString() const;

  friend bool operator==(const VertexMap&, const VertexMap&) = default;
  friend auto operator<=>(const VertexMap&, const VertexMap&) = default;

 private:
  int fiber_order_ = 0;
  std::vector<Vertex> image_;
};

enum class EdgeKind { kType1, kType2 };

struct ConnectingEdge {
  Edge edge;       // product vertices, first < second
  Edge base_edge;  // originating edge of the base graph
};

class ProductGraph {
 public:
  ProductGraph(Graph base, Graph fiber, VertexMap map);

  const Graph& graph() const { return graph_; }
  const Graph& base() const { return base_; }
  const Graph& fiber() const { return fiber_; }
  const VertexMap& map() const { return map_; }

  Vertex vertex_of(Vertex g, Vertex h) const { return g * fiber_.order() + h; }
  Vertex base_of(Vertex v) const { return v / fiber_.order(); }
  Vertex fiber_of(Vertex v) const { return v % fiber_.order(); }

  // Throws GraphError if uv is not an edge.
  EdgeKind edge_kind(Vertex u, Vertex v) const;

  // One entry per base edge, in base edge order.
  const std::vector<ConnectingEdge>& connecting_edges() const {
    return connecting_;
  }

 private:
  Graph base_;
  Graph fiber_;
  VertexMap map_;
  Graph graph_;
  std::vector<ConnectingEdge> connecting_;
};

// Throws GraphError when f does not match the factor orders.
ProductGraph SierpinskiProduct(const Graph& g, const Graph& h,
                               const VertexMap& f);

std::vector<ConnectingEdge> ConnectingEdges(const ProductGraph& p);

// ---------------------------------------------------------------------------
// Automorphisms and enumeration of H^G.

using Permutation = std::vector<Vertex>;

// All automorphisms of g (identity first). Brute force for order <= 10;
// larger complete graphs, paths and stars are handled by their known groups.
// Throws SizeError for other large graphs or when more than `limit`
// automorphisms exist.
std::vector<Permutation> Automorphisms(const Graph& g,
                                       int64_t limit = 1'000'000);

struct EnumerationOptions {
  bool reduce_symmetry = false;
  // Largest n(H)^n(G) accepted (SizeError above).
  int64_t max_maps = 100'000'000;
  // Largest |Aut(G)| * |Aut(H)| accepted for reduction (SizeError above).
  int64_t max_group_product = 1'000'000;
};

// Streams H^G in lexicographic order of the image vector. With reduction,
// a map is emitted iff it is the lexicographically smallest element of its
// orbit under f -> σ ∘ f ∘ π (σ ∈ Aut(H), π ∈ Aut(G)).
class MapEnumerator {
 public:
  MapEnumerator(const Graph& g, const Graph& h,
                const EnumerationOptions& options = {});

  // Advances to the next emitted map; false when exhausted.
  bool Next(VertexMap* out);

  int64_t total_maps() const { return total_; }
  int64_t emitted() const { return emitted_; }

 private:
  bool IsOrbitMinimum(const std::vector<Vertex>& image) const;
  bool Advance();

  int base_order_;
  int fiber_order_;
  bool reduce_;
  std::vector<Permutation> base_aut_;
  std::vector<Permutation> fiber_aut_;
  std::vector<Vertex> current_;
  bool started_ = false;
  bool done_ = false;
  int64_t total_ = 0;
  int64_t emitted_ = 0;
};

std::vector<VertexMap> EnumerateMaps(const Graph& g, const Graph& h,
                                     const EnumerationOptions& options = {});

// ---------------------------------------------------------------------------
// χ_ρ(G, H) = min over f of χ_ρ(G ⊗_f H), and the upper variant (max).

enum class ChiMode { kMin, kMax };

const char* ToString(ChiMode mode);

struct ChiOptions {
  EnumerationOptions enumeration;
  // Per-product solver limits. A decision hitting its node budget ends the
  // whole computation with a partial result.
  SearchOptions search;
};

struct ChiResult {
  // kSat: exact. kUnknown: budget exhausted; value is the best found over
  // the maps explored so far.
  SearchStatus status = SearchStatus::kUnknown;
  int value = 0;
  std::optional<VertexMap> map;
  std::optional<PackingColoring> coloring;
  int64_t maps_explored = 0;
  int64_t nodes = 0;
};

// Exact, with pruning that never changes the answer: in min mode a map is
// skipped once its product provably needs >= best colors; in max mode once
// it provably admits a best-coloring. The witness is the first optimal map
// in enumeration order.
ChiResult SierpinskiChi(const Graph& g, const Graph& h, ChiMode mode,
                        const ChiOptions& options = {});

}  // namespace sierpack

#endif  // SIERPACK_SIERPINSKI_H_
