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

#ifndef SIERPACK_GRAPH_H_
#define SIERPACK_GRAPH_H_

#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sierpack {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

// Thrown when an input violates a documented precondition (bad endpoint,
// dimension mismatch, non-tree passed to a tree routine, ...).
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Thrown by exact searches when the instance is larger than the configured
// bound.
class SizeError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// Undirected simple graph on vertices 0..order-1. Immutable once built;
// adjacency lists are kept sorted.
class Graph {
 public:
  Graph() = default;

  // Builds a graph from an edge list. Rejects loops, duplicate edges and
  // out-of-range endpoints with GraphError.
  Graph(int order, std::span<const Edge> edges);
  Graph(int order, std::initializer_list<Edge> edges)
      : Graph(order, std::span<const Edge>(edges.begin(), edges.size())) {}

  int order() const { return static_cast<int>(adjacency_.size()); }
  int size() const { return num_edges_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adjacency_[v].size()); }
  int max_degree() const;
  bool adjacent(Vertex u, Vertex v) const;

  // Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  bool has_labels() const { return !labels_.empty(); }
  const std::string& label(Vertex v) const;
  // Returns a copy carrying the given labels (one per vertex).
  Graph WithLabels(std::vector<std::string> labels) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.adjacency_ == b.adjacency_;
  }

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<std::string> labels_;
  int num_edges_ = 0;
};

// All-pairs hop distances; kUnreachable marks pairs in different components.
class DistanceMatrix {
 public:
  static constexpr int kUnreachable = std::numeric_limits<int>::max();

  DistanceMatrix() = default;
  explicit DistanceMatrix(const Graph& g);

  int order() const { return order_; }
  int operator()(Vertex u, Vertex v) const {
    return dist_[static_cast<size_t>(u) * order_ + v];
  }
  std::span<const int> row(Vertex u) const {
    return {dist_.data() + static_cast<size_t>(u) * order_,
            static_cast<size_t>(order_)};
  }

 private:
  int order_ = 0;
  std::vector<int> dist_;
};

// BFS from every vertex.
DistanceMatrix Distances(const Graph& g);

// Hop distances from a single source (kUnreachable where no path exists).
std::vector<int> BfsDistances(const Graph& g, Vertex source);

// Largest finite distance, or kUnreachable when g is disconnected. The empty
// graph and K_1 have diameter 0.
int Diameter(const Graph& g);
int Diameter(const DistanceMatrix& d);

bool IsConnected(const Graph& g);
bool IsTree(const Graph& g);

// Component id per vertex, ids assigned 0, 1, ... in order of first vertex.
std::vector<int> ComponentIds(const Graph& g);

// Subgraph induced by `vertices`; vertex i of the result is vertices[i].
Graph InducedSubgraph(const Graph& g, std::span<const Vertex> vertices);

// Family generators. path(n) numbers vertices along the path, star(n) is
// K_{1,n} with vertex 0 as the center.
Graph Path(int n);
Graph Cycle(int n);
Graph Star(int leaves);
Graph Complete(int n);

// G ⊙ pK_1: every vertex v < n(g) receives p new pendant neighbours, numbered
// n(g) + v*p .. n(g) + v*p + p-1. Original vertices keep their indices.
Graph Corona(const Graph& g, int pendants);

// Graph with vertices renamed by perm (vertex v becomes perm[v]).
Graph Relabel(const Graph& g, std::span<const Vertex> perm);

}  // namespace sierpack

#endif  // SIERPACK_GRAPH_H_
