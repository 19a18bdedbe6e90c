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

#include "sierpack/tree_iso.h"

#include <algorithm>

namespace sierpack {

std::vector<Vertex> TreeCenters(const Graph& tree) {
  const int n = tree.order();
  if (n == 0) return {};
  if (n == 1) return {0};
  std::vector<int> degree(n);
  std::vector<Vertex> layer;
  for (Vertex v = 0; v < n; ++v) {
    degree[v] = tree.degree(v);
    if (degree[v] <= 1) layer.push_back(v);
  }
  int remaining = n;
  while (remaining > 2) {
    remaining -= static_cast<int>(layer.size());
    std::vector<Vertex> next;
    for (Vertex leaf : layer) {
      for (Vertex w : tree.neighbors(leaf)) {
        if (--degree[w] == 1) next.push_back(w);
      }
    }
    layer = std::move(next);
  }
  std::sort(layer.begin(), layer.end());
  return layer;
}

std::string RootedTreeCode(const Graph& tree, Vertex root,
                           std::span<const std::string> vertex_tags) {
  const int n = tree.order();
  // Iterative post-order so deep paths do not exhaust the stack.
  std::vector<Vertex> parent(n, -1);
  std::vector<Vertex> order;
  order.reserve(n);
  std::vector<Vertex> stack{root};
  parent[root] = root;
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    order.push_back(u);
    for (Vertex w : tree.neighbors(u)) {
      if (parent[w] < 0) {
        parent[w] = u;
        stack.push_back(w);
      }
    }
  }
  std::vector<std::vector<std::string>> child_codes(n);
  std::string code;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    Vertex u = *it;
    auto& kids = child_codes[u];
    std::sort(kids.begin(), kids.end());
    code = "(";
    if (!vertex_tags.empty()) {
      code += vertex_tags[u];
      code += ':';
    }
    for (auto& k : kids) code += k;
    code += ')';
    kids.clear();
    kids.shrink_to_fit();
    if (u != root) child_codes[parent[u]].push_back(std::move(code));
  }
  return code;
}

std::string CanonicalTreeCode(const Graph& tree,
                              std::span<const std::string> vertex_tags) {
  if (!IsTree(tree)) throw GraphError("canonical tree code needs a tree");
  std::string best;
  bool first = true;
  for (Vertex c : TreeCenters(tree)) {
    std::string code = RootedTreeCode(tree, c, vertex_tags);
    if (first || code < best) {
      best = std::move(code);
      first = false;
    }
  }
  return best;
}

bool TreeIsomorphic(const Graph& a, const Graph& b) {
  if (!IsTree(a) || !IsTree(b)) {
    throw GraphError("tree isomorphism needs two trees");
  }
  if (a.order() != b.order()) return false;
  return CanonicalTreeCode(a) == CanonicalTreeCode(b);
}

}  // namespace sierpack
