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

#include "sierpack/recognize.h"

#include <algorithm>
#include <functional>
#include <set>
#include <utility>

#include "sierpack/tree_iso.h"

namespace sierpack {

const char* ToString(RecognitionStatus s) {
  return s == RecognitionStatus::kFactored ? "factored" : "not_a_product";
}

std::vector<Edge> PendantSplitEdges(const Graph& x, int n2) {
  const int n = x.order();
  if (n == 0) return {};
  if (!IsConnected(x)) throw GraphError("pendant split edges need a connected graph");
  // Iterative bridge search; a tree edge (parent, v) is a bridge iff
  // low[v] > disc[parent], and it separates the DFS subtree of v.
  std::vector<int> disc(n, -1), low(n, 0), size(n, 1);
  std::vector<Vertex> parent(n, -1);
  std::vector<size_t> next_edge(n, 0);
  std::vector<Vertex> stack{0};
  int timer = 0;
  disc[0] = low[0] = timer++;
  std::vector<Edge> out;
  while (!stack.empty()) {
    Vertex v = stack.back();
    auto nbrs = x.neighbors(v);
    if (next_edge[v] < nbrs.size()) {
      Vertex w = nbrs[next_edge[v]++];
      if (disc[w] < 0) {
        parent[w] = v;
        disc[w] = low[w] = timer++;
        stack.push_back(w);
      } else if (w != parent[v]) {
        low[v] = std::min(low[v], disc[w]);
      }
      continue;
    }
    stack.pop_back();
    Vertex p = parent[v];
    if (p < 0) continue;
    low[p] = std::min(low[p], low[v]);
    size[p] += size[v];
    if (low[v] > disc[p] && (size[v] == n2 || n - size[v] == n2)) {
      out.emplace_back(std::min(p, v), std::max(p, v));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Vertices of the alive part of `x` reachable from `start` without using
// the edge start-blocked.
std::vector<Vertex> SideOf(const Graph& x, const std::vector<char>& alive,
                           Vertex start, Vertex blocked) {
  std::vector<Vertex> out{start};
  std::vector<char> seen(x.order(), 0);
  seen[start] = seen[blocked] = 1;
  for (size_t i = 0; i < out.size(); ++i) {
    for (Vertex w : x.neighbors(out[i])) {
      if (alive[w] && !seen[w]) {
        seen[w] = 1;
        out.push_back(w);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

struct PeelCandidate {
  Edge edge;      // (inside, outside)
  std::vector<Vertex> fiber;
};

// Candidates in the alive subtree, ordered by edge then by side.
std::vector<PeelCandidate> Candidates(const Graph& x,
                                      const std::vector<char>& alive,
                                      int alive_count, int n2) {
  Vertex root = 0;
  while (!alive[root]) ++root;
  std::vector<Vertex> order{root}, parent(x.order(), -1);
  parent[root] = root;
  for (size_t i = 0; i < order.size(); ++i) {
    for (Vertex w : x.neighbors(order[i])) {
      if (alive[w] && parent[w] < 0) {
        parent[w] = order[i];
        order.push_back(w);
      }
    }
  }
  std::vector<int> size(x.order(), 1);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    if (*it != root) size[parent[*it]] += size[*it];
  }
  std::vector<std::pair<Edge, Vertex>> picks;  // (sorted edge, inside end)
  for (Vertex v : order) {
    if (v == root) continue;
    Vertex p = parent[v];
    Edge e{std::min(p, v), std::max(p, v)};
    if (size[v] == n2) picks.push_back({e, v});
    if (alive_count - size[v] == n2) picks.push_back({e, p});
  }
  std::sort(picks.begin(), picks.end());
  std::vector<PeelCandidate> out;
  for (const auto& [e, inside] : picks) {
    Vertex outside = inside == e.first ? e.second : e.first;
    out.push_back({{inside, outside}, SideOf(x, alive, inside, outside)});
  }
  return out;
}

class MapSolver {
 public:
  MapSolver(const Graph& x, const PeelTrace& trace, const Graph& base,
            const Graph& fiber)
      : base_(base), fiber_(fiber), n1_(base.order()), n2_(fiber.order()) {
    const int n = x.order();
    std::vector<int> owner(n, -1), local(n, -1);
    for (int b = 0; b < n1_; ++b) {
      const auto& vs = trace.fibers[b];
      for (size_t i = 0; i < vs.size(); ++i) {
        owner[vs[i]] = b;
        local[vs[i]] = static_cast<int>(i);
      }
      pieces_.push_back(InducedSubgraph(x, vs));
    }
    endpoint_.assign(n1_, std::vector<int>(n1_, -1));
    for (const auto& step : trace.steps) {
      const auto [in, out] = step.edge;
      endpoint_[owner[in]][owner[out]] = local[in];
      endpoint_[owner[out]][owner[in]] = local[out];
    }
    parent_.assign(n1_, -1);
    children_.resize(n1_);
    std::vector<Vertex> queue{0};
    parent_[0] = 0;
    for (size_t i = 0; i < queue.size(); ++i) {
      for (Vertex w : base.neighbors(queue[i])) {
        if (parent_[w] < 0) {
          parent_[w] = queue[i];
          children_[queue[i]].push_back(w);
          queue.push_back(w);
        }
      }
    }
    parent_[0] = -1;
    const size_t states = static_cast<size_t>(n1_) * n2_ * (n2_ + 1);
    memo_.assign(states, kUnknown);
    choice_.resize(states);
  }

  std::optional<VertexMap> Solve() {
    for (int r = 0; r < n2_; ++r) {
      if (!Feasible(0, r, -1)) continue;
      std::vector<Vertex> image(n1_, -1);
      Assign(0, r, -1, image);
      return VertexMap(n2_, std::move(image));
    }
    return std::nullopt;
  }

 private:
  static constexpr signed char kUnknown = -1;

  size_t Key(Vertex x, int fx, int fp) const {
    return (static_cast<size_t>(x) * n2_ + fx) * (n2_ + 1) + (fp + 1);
  }

  // Is there an isomorphism fiber -> piece x sending value[y] to the
  // endpoint towards y for every y in `fixed`?
  bool Consistent(Vertex x, const std::vector<std::pair<Vertex, int>>& fixed) {
    std::vector<std::string> piece_tags(n2_), fiber_tags(n2_);
    for (const auto& [y, value] : fixed) {
      const std::string id = std::to_string(y) + ",";
      piece_tags[endpoint_[x][y]] += id;
      fiber_tags[value] += id;
    }
    return CanonicalTreeCode(pieces_[x], piece_tags) ==
           CanonicalTreeCode(fiber_, fiber_tags);
  }

  // Can the subtree of x be completed given f(x) = fx and f(parent) = fp?
  bool Feasible(Vertex x, int fx, int fp) {
    const size_t key = Key(x, fx, fp);
    if (memo_[key] != kUnknown) return memo_[key];
    std::vector<std::pair<Vertex, int>> fixed;
    if (fp >= 0) fixed.push_back({parent_[x], fp});
    std::vector<int> values;
    bool ok = Extend(x, fx, 0, fixed, values);
    memo_[key] = ok;
    if (ok) choice_[key] = std::move(values);
    return ok;
  }

  bool Extend(Vertex x, int fx, size_t index,
              std::vector<std::pair<Vertex, int>>& fixed,
              std::vector<int>& values) {
    const auto& kids = children_[x];
    if (index == kids.size()) return Consistent(x, fixed);
    const Vertex c = kids[index];
    for (int h = 0; h < n2_; ++h) {
      fixed.push_back({c, h});
      values.push_back(h);
      if (Consistent(x, fixed) && Feasible(c, h, fx) &&
          Extend(x, fx, index + 1, fixed, values)) {
        return true;
      }
      fixed.pop_back();
      values.pop_back();
    }
    return false;
  }

  void Assign(Vertex x, int fx, int fp, std::vector<Vertex>& image) {
    image[x] = fx;
    const auto& values = choice_[Key(x, fx, fp)];
    for (size_t i = 0; i < children_[x].size(); ++i) {
      Assign(children_[x][i], values[i], fx, image);
    }
  }

  const Graph& base_;
  const Graph& fiber_;
  int n1_;
  int n2_;
  std::vector<Graph> pieces_;
  std::vector<std::vector<int>> endpoint_;
  std::vector<Vertex> parent_;
  std::vector<std::vector<Vertex>> children_;
  std::vector<signed char> memo_;
  std::vector<std::vector<int>> choice_;
};

class SplitSearch {
 public:
  SplitSearch(const Graph& x, int n1, int n2, bool exhaustive)
      : x_(x), n1_(n1), n2_(n2), exhaustive_(exhaustive) {}

  std::optional<Factorization> Run(std::string* reason) {
    std::vector<char> alive(x_.order(), 1);
    PeelTrace trace;
    auto result = Peel(alive, x_.order(), trace);
    if (!result) *reason = reason_;
    return result;
  }

 private:
  std::optional<Factorization> Peel(std::vector<char>& alive, int count,
                                    PeelTrace& trace) {
    if (count == n2_) return Finish(alive, trace);
    auto candidates = Candidates(x_, alive, count, n2_);
    if (candidates.empty()) {
      Fail("no cut edge splits off " + std::to_string(n2_) +
           " vertices after peeling " + std::to_string(trace.fibers.size()) +
           " fibers");
      return std::nullopt;
    }
    if (!exhaustive_) candidates.resize(1);
    for (auto& cand : candidates) {
      Graph piece = InducedSubgraph(x_, cand.fiber);
      if (trace.fibers.empty()) {
        fiber_ = piece;
      } else if (!TreeIsomorphic(piece, fiber_)) {
        Fail("fiber " + std::to_string(trace.fibers.size()) +
             " is not isomorphic to the first fiber");
        continue;
      }
      trace.fibers.push_back(cand.fiber);
      if (exhaustive_ && !visited_.insert(PartitionKey(trace)).second) {
        trace.fibers.pop_back();
        continue;
      }
      trace.steps.push_back(
          {static_cast<Vertex>(trace.fibers.size() - 1), cand.edge});
      for (Vertex v : cand.fiber) alive[v] = 0;
      auto result = Peel(alive, count - n2_, trace);
      for (Vertex v : cand.fiber) alive[v] = 1;
      if (result) return result;
      trace.steps.pop_back();
      trace.fibers.pop_back();
    }
    return std::nullopt;
  }

  std::optional<Factorization> Finish(const std::vector<char>& alive,
                                      PeelTrace trace) {
    std::vector<Vertex> last;
    for (Vertex v = 0; v < x_.order(); ++v) {
      if (alive[v]) last.push_back(v);
    }
    if (!TreeIsomorphic(InducedSubgraph(x_, last), fiber_)) {
      Fail("last fiber is not isomorphic to the first fiber");
      return std::nullopt;
    }
    trace.fibers.push_back(std::move(last));
    std::vector<int> owner(x_.order(), -1);
    for (int b = 0; b < n1_; ++b) {
      for (Vertex v : trace.fibers[b]) owner[v] = b;
    }
    std::vector<Edge> base_edges;
    for (const auto& step : trace.steps) {
      base_edges.push_back({step.base_vertex, owner[step.edge.second]});
    }
    Graph base(n1_, base_edges);
    auto map = ReconstructMap(x_, trace, base, fiber_);
    if (!map) {
      Fail("fibers match but no map f is consistent with the connecting edges");
      return std::nullopt;
    }
    ProductGraph rebuilt(base, fiber_, *map);
    if (!TreeIsomorphic(rebuilt.graph(), x_)) {
      Fail("rebuilt product is not isomorphic to the input");
      return std::nullopt;
    }
    return Factorization{std::move(base), fiber_, *std::move(map),
                         std::move(trace)};
  }

  static std::string PartitionKey(const PeelTrace& trace) {
    auto fibers = trace.fibers;
    std::sort(fibers.begin(), fibers.end());
    std::string key;
    for (const auto& f : fibers) {
      for (Vertex v : f) key += std::to_string(v) + ",";
      key += ";";
    }
    return key;
  }

  void Fail(std::string reason) {
    if (reason_.empty()) reason_ = std::move(reason);
  }

  const Graph& x_;
  int n1_;
  int n2_;
  bool exhaustive_;
  Graph fiber_;
  std::set<std::string> visited_;
  std::string reason_;
};

}  // namespace

std::optional<VertexMap> ReconstructMap(const Graph& x, const PeelTrace& trace,
                                        const Graph& base,
                                        const Graph& fiber) {
  const int n1 = base.order();
  if (static_cast<int>(trace.fibers.size()) != n1 ||
      static_cast<int>(trace.steps.size()) != base.size()) {
    throw GraphError("peel trace does not match the base tree");
  }
  for (const auto& f : trace.fibers) {
    if (static_cast<int>(f.size()) != fiber.order()) {
      throw GraphError("peel trace fiber has the wrong order");
    }
  }
  if (n1 == 0) return VertexMap(fiber.order(), {});
  return MapSolver(x, trace, base, fiber).Solve();
}

RecognitionOutcome RecognizeTreeProduct(const Graph& x, bool exhaustive) {
  RecognitionOutcome outcome;
  const int n = x.order();
  if (!IsTree(x)) {
    outcome.diagnostics.push_back({0, 0, "input is not a tree"});
    return outcome;
  }
  std::set<std::pair<std::string, std::string>> seen;
  for (int n2 = 2; n2 <= n / 2; ++n2) {
    if (n % n2 != 0) continue;
    const int n1 = n / n2;
    std::string reason;
    auto found = SplitSearch(x, n1, n2, exhaustive).Run(&reason);
    if (!found) {
      outcome.diagnostics.push_back({n1, n2, reason});
      continue;
    }
    outcome.diagnostics.push_back({n1, n2, ""});
    auto key = std::make_pair(CanonicalTreeCode(found->base),
                              CanonicalTreeCode(found->fiber));
    if (seen.insert(key).second) {
      outcome.factorizations.push_back(std::move(*found));
    }
  }
  if (outcome.diagnostics.empty()) {
    outcome.diagnostics.push_back(
        {0, 0, "order " + std::to_string(n) + " is not a product n1*n2 with n1, n2 >= 2"});
  }
  if (!outcome.factorizations.empty()) {
    outcome.status = RecognitionStatus::kFactored;
  }
  return outcome;
}

}  // namespace sierpack
