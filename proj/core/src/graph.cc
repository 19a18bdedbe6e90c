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

#include "sierpack/graph.h"

#include <algorithm>
#include <deque>
#include <numeric>

namespace sierpack {

Graph::Graph(int order, std::span<const Edge> edges) {
  if (order < 0) throw GraphError("negative graph order");
  adjacency_.resize(order);
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= order || v >= order) {
      throw GraphError("edge endpoint out of range: " + std::to_string(u) +
                       " " + std::to_string(v));
    }
    if (u == v) throw GraphError("self-loop at " + std::to_string(u));
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  for (auto& list : adjacency_) {
    std::sort(list.begin(), list.end());
    if (std::adjacent_find(list.begin(), list.end()) != list.end()) {
      throw GraphError("duplicate edge");
    }
  }
  num_edges_ = static_cast<int>(edges.size());
}

int Graph::max_degree() const {
  int best = 0;
  for (const auto& list : adjacency_) {
    best = std::max(best, static_cast<int>(list.size()));
  }
  return best;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  const auto& list = adjacency_[u];
  return std::binary_search(list.begin(), list.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges_);
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

const std::string& Graph::label(Vertex v) const {
  static const std::string kEmpty;
  return labels_.empty() ? kEmpty : labels_[v];
}

Graph Graph::WithLabels(std::vector<std::string> labels) const {
  if (static_cast<int>(labels.size()) != order()) {
    throw GraphError("label count does not match order");
  }
  Graph copy = *this;
  copy.labels_ = std::move(labels);
  return copy;
}

std::vector<int> BfsDistances(const Graph& g, Vertex source) {
  std::vector<int> dist(g.order(), DistanceMatrix::kUnreachable);
  std::deque<Vertex> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(u)) {
      if (dist[w] == DistanceMatrix::kUnreachable) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

DistanceMatrix::DistanceMatrix(const Graph& g) : order_(g.order()) {
  dist_.resize(static_cast<size_t>(order_) * order_);
  for (Vertex u = 0; u < order_; ++u) {
    auto row = BfsDistances(g, u);
    std::copy(row.begin(), row.end(),
              dist_.begin() + static_cast<size_t>(u) * order_);
  }
}

DistanceMatrix Distances(const Graph& g) { return DistanceMatrix(g); }

int Diameter(const DistanceMatrix& d) {
  int best = 0;
  for (Vertex u = 0; u < d.order(); ++u) {
    for (int x : d.row(u)) best = std::max(best, x);
  }
  return best;
}

int Diameter(const Graph& g) { return Diameter(Distances(g)); }

std::vector<int> ComponentIds(const Graph& g) {
  std::vector<int> comp(g.order(), -1);
  int next = 0;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (comp[s] >= 0) continue;
    comp[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(u)) {
        if (comp[w] < 0) {
          comp[w] = next;
          stack.push_back(w);
        }
      }
    }
    ++next;
  }
  return comp;
}

bool IsConnected(const Graph& g) {
  if (g.order() <= 1) return true;
  auto comp = ComponentIds(g);
  return std::all_of(comp.begin(), comp.end(), [](int c) { return c == 0; });
}

bool IsTree(const Graph& g) {
  return g.order() >= 1 && g.size() == g.order() - 1 && IsConnected(g);
}

Graph InducedSubgraph(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<int> local(g.order(), -1);
  for (size_t i = 0; i < vertices.size(); ++i) {
    local[vertices[i]] = static_cast<int>(i);
  }
  std::vector<Edge> edges;
  for (size_t i = 0; i < vertices.size(); ++i) {
    for (Vertex w : g.neighbors(vertices[i])) {
      if (local[w] > static_cast<int>(i)) {
        edges.emplace_back(static_cast<int>(i), local[w]);
      }
    }
  }
  return Graph(static_cast<int>(vertices.size()), edges);
}

Graph Path(int n) {
  if (n < 1) throw GraphError("path needs at least one vertex");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(n, edges);
}

Graph Cycle(int n) {
  if (n < 3) throw GraphError("cycle needs at least three vertices");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  edges.emplace_back(0, n - 1);
  return Graph(n, edges);
}

Graph Star(int leaves) {
  if (leaves < 0) throw GraphError("star needs a non-negative leaf count");
  std::vector<Edge> edges;
  for (int i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
  return Graph(leaves + 1, edges);
}

Graph Complete(int n) {
  if (n < 1) throw GraphError("complete graph needs at least one vertex");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  }
  return Graph(n, edges);
}

Graph Corona(const Graph& g, int pendants) {
  if (pendants < 1) throw GraphError("corona needs at least one pendant");
  const int n = g.order();
  std::vector<Edge> edges = g.edges();
  for (Vertex v = 0; v < n; ++v) {
    for (int j = 0; j < pendants; ++j) edges.emplace_back(v, n + v * pendants + j);
  }
  return Graph(n * (1 + pendants), edges);
}

Graph Relabel(const Graph& g, std::span<const Vertex> perm) {
  if (static_cast<int>(perm.size()) != g.order()) {
    throw GraphError("permutation size does not match order");
  }
  std::vector<Edge> edges;
  for (const auto& [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
  return Graph(g.order(), edges);
}

}  // namespace sierpack
