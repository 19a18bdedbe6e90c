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

#include "sierpack/packing.h"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <string>

namespace sierpack {

PackingColoring::PackingColoring(std::vector<int> colors)
    : colors_(std::move(colors)) {
  for (int c : colors_) {
    if (c < 1) throw GraphError("packing colors must be >= 1");
    k_ = std::max(k_, c);
  }
}

int PackingColoring::NumDistinctColors() const {
  return static_cast<int>(std::set<int>(colors_.begin(), colors_.end()).size());
}

VerifyResult VerifyPackingColoring(const DistanceMatrix& d,
                                   const PackingColoring& c) {
  if (c.order() != d.order()) {
    throw GraphError("coloring covers " + std::to_string(c.order()) +
                     " vertices, graph has " + std::to_string(d.order()));
  }
  for (Vertex u = 0; u < d.order(); ++u) {
    for (Vertex v = u + 1; v < d.order(); ++v) {
      if (c[u] == c[v] && d(u, v) <= c[u]) {
        return {false, PackingViolation{u, v, c[u], d(u, v)}};
      }
    }
  }
  return {};
}

VerifyResult VerifyPackingColoring(const Graph& g, const PackingColoring& c) {
  if (c.order() != g.order()) {
    throw GraphError("coloring covers " + std::to_string(c.order()) +
                     " vertices, graph has " + std::to_string(g.order()));
  }
  return VerifyPackingColoring(Distances(g), c);
}

const char* ToString(SearchStatus s) {
  switch (s) {
    case SearchStatus::kSat:
      return "sat";
    case SearchStatus::kUnsat:
      return "unsat";
    case SearchStatus::kUnknown:
      return "unknown";
  }
  return "?";
}

namespace {

constexpr int kMaxColors = 63;

uint64_t Bit(int color) { return uint64_t{1} << (color - 1); }

class DecisionSearch {
 public:
  DecisionSearch(const Graph& g, const DistanceMatrix& d, int diameter, int k,
                 int64_t node_budget)
      : g_(g), d_(d), n_(g.order()), k_(k), node_budget_(node_budget) {
    // Colors >= diameter are single-use and interchangeable.
    first_unique_ = (diameter == DistanceMatrix::kUnreachable)
                        ? k_ + 1
                        : std::max(1, diameter);
    for (int c = 1; c <= k_; ++c) {
      (c >= first_unique_ ? unique_mask_ : small_mask_) |= Bit(c);
    }
    use_capacity_bound_ = diameter <= 4;

    by_distance_.resize(n_);
    ball_end_.resize(n_);
    for (Vertex v = 0; v < n_; ++v) {
      auto& list = by_distance_[v];
      for (Vertex u = 0; u < n_; ++u) {
        if (u != v && d_(v, u) != DistanceMatrix::kUnreachable) {
          list.push_back(u);
        }
      }
      std::stable_sort(list.begin(), list.end(),
                       [&](Vertex a, Vertex b) { return d_(v, a) < d_(v, b); });
      auto& ends = ball_end_[v];
      ends.assign(k_ + 1, 0);
      size_t idx = 0;
      for (int r = 0; r <= k_; ++r) {
        while (idx < list.size() && d_(v, list[idx]) <= r) ++idx;
        ends[r] = static_cast<int>(idx);
      }
    }
    domain_.assign(n_, small_mask_ | unique_mask_);
    color_.assign(n_, 0);
  }

  DecisionResult Run(std::span<const int> precolored) {
    DecisionResult result;
    int uncolored = n_;
    if (!precolored.empty()) {
      for (Vertex v = 0; v < n_; ++v) {
        const int c = precolored[v];
        if (c == 0) continue;
        if (c > k_ || !(domain_[v] & Bit(c)) || !Assign(v, c)) {
          result.status = SearchStatus::kUnsat;
          return result;
        }
        --uncolored;
      }
    }
    bool found = Recurse(uncolored);
    result.nodes = nodes_;
    if (found) {
      result.status = SearchStatus::kSat;
      result.coloring = PackingColoring(color_);
    } else {
      result.status = aborted_ ? SearchStatus::kUnknown : SearchStatus::kUnsat;
    }
    return result;
  }

 private:
  bool Assign(Vertex v, int c) {
    color_[v] = c;
    const uint64_t bit = Bit(c);
    const auto& list = by_distance_[v];
    const int end = ball_end_[v][std::min(c, k_)];
    for (int i = 0; i < end; ++i) {
      Vertex u = list[i];
      if (color_[u] == 0 && (domain_[u] & bit)) {
        domain_[u] &= ~bit;
        trail_.emplace_back(u, bit);
        if (domain_[u] == 0) return false;
      }
    }
    return true;
  }

  void Undo(Vertex v, size_t mark) {
    while (trail_.size() > mark) {
      domain_[trail_.back().first] |= trail_.back().second;
      trail_.pop_back();
    }
    color_[v] = 0;
  }

  int Options(Vertex v) const {
    const uint64_t dom = domain_[v];
    return std::popcount(dom & small_mask_) + ((dom & unique_mask_) ? 1 : 0);
  }

  // Upper bound on how many uncolored vertices color c can still take:
  // greedily cover the candidates by groups of pairwise distance <= c.
  int CapacityOf(int c, std::vector<Vertex>& cand,
                 std::vector<char>& covered) const {
    cand.clear();
    for (Vertex v = 0; v < n_; ++v) {
      if (color_[v] == 0 && (domain_[v] & Bit(c))) cand.push_back(v);
    }
    covered.assign(cand.size(), 0);
    int groups = 0;
    std::vector<Vertex> group;
    for (size_t i = 0; i < cand.size(); ++i) {
      if (covered[i]) continue;
      ++groups;
      group.assign(1, cand[i]);
      covered[i] = 1;
      for (size_t j = i + 1; j < cand.size(); ++j) {
        if (covered[j]) continue;
        bool close = std::all_of(group.begin(), group.end(), [&](Vertex w) {
          return d_(cand[j], w) <= c;
        });
        if (close) {
          group.push_back(cand[j]);
          covered[j] = 1;
        }
      }
    }
    return groups;
  }

  bool CapacitySuffices(int uncolored) {
    // Unused single-use colors are still available to every vertex.
    uint64_t unused = unique_mask_;
    for (Vertex v = 0; v < n_; ++v) {
      if (color_[v] >= first_unique_) unused &= ~Bit(color_[v]);
    }
    int total = std::popcount(unused);
    if (total >= uncolored) return true;
    for (int c = 1; c < first_unique_ && c <= k_; ++c) {
      total += CapacityOf(c, scratch_cand_, scratch_covered_);
      if (total >= uncolored) return true;
    }
    return false;
  }

  bool Recurse(int uncolored) {
    if (uncolored == 0) return true;
    if (node_budget_ > 0 && nodes_ >= node_budget_) {
      aborted_ = true;
      return false;
    }
    ++nodes_;
    if (use_capacity_bound_ && !CapacitySuffices(uncolored)) return false;

    Vertex pick = -1;
    int best_options = kMaxColors + 2;
    for (Vertex v = 0; v < n_; ++v) {
      if (color_[v]) continue;
      int opts = Options(v);
      if (opts < best_options ||
          (opts == best_options && g_.degree(v) > g_.degree(pick))) {
        best_options = opts;
        pick = v;
      }
    }
    if (best_options == 0) return false;

    const uint64_t dom = domain_[pick];
    uint64_t tries = dom & small_mask_;
    if (uint64_t unique = dom & unique_mask_) tries |= unique & (~unique + 1);
    while (tries) {
      const int c = std::countr_zero(tries) + 1;
      tries &= tries - 1;
      const size_t mark = trail_.size();
      if (Assign(pick, c) && Recurse(uncolored - 1)) return true;
      Undo(pick, mark);
      if (aborted_) return false;
    }
    return false;
  }

  const Graph& g_;
  const DistanceMatrix& d_;
  int n_;
  int k_;
  int64_t node_budget_;
  int first_unique_ = 1;
  uint64_t small_mask_ = 0;
  uint64_t unique_mask_ = 0;
  bool use_capacity_bound_ = false;
  std::vector<std::vector<Vertex>> by_distance_;
  std::vector<std::vector<int>> ball_end_;
  std::vector<uint64_t> domain_;
  std::vector<int> color_;
  std::vector<std::pair<Vertex, uint64_t>> trail_;
  std::vector<Vertex> scratch_cand_;
  std::vector<char> scratch_covered_;
  int64_t nodes_ = 0;
  bool aborted_ = false;
};

PackingColoring AllDistinct(int n) {
  std::vector<int> colors(n);
  std::iota(colors.begin(), colors.end(), 1);
  return PackingColoring(std::move(colors));
}

}  // namespace

PackingSolver::PackingSolver(const Graph& g, SearchOptions options)
    : graph_(g), options_(options) {
  if (g.order() > options_.max_order) {
    throw SizeError("packing search limited to " +
                    std::to_string(options_.max_order) + " vertices, got " +
                    std::to_string(g.order()));
  }
  dist_ = Distances(graph_);
  diameter_ = Diameter(dist_);
}

DecisionResult PackingSolver::Complete(int k,
                                       std::span<const int> precolored) const {
  const int n = graph_.order();
  if (!precolored.empty() && static_cast<int>(precolored.size()) != n) {
    throw GraphError("precoloring size does not match graph order");
  }
  DecisionResult result;
  if (n == 0) {
    result.status = SearchStatus::kSat;
    result.coloring = PackingColoring();
    return result;
  }
  if (k < 1) {
    result.status = SearchStatus::kUnsat;
    return result;
  }
  const bool has_fixed =
      std::any_of(precolored.begin(), precolored.end(),
                  [](int c) { return c != 0; });
  if (k >= n && !has_fixed) {
    result.status = SearchStatus::kSat;
    result.coloring = AllDistinct(n);
    return result;
  }
  if (k > kMaxColors) {
    throw SizeError("decision search supports at most " +
                    std::to_string(kMaxColors) + " colors");
  }
  DecisionSearch search(graph_, dist_, diameter_, k, options_.node_budget);
  return search.Run(has_fixed ? precolored : std::span<const int>());
}

DecisionResult PackingSolver::Decide(int k) const { return Complete(k, {}); }

int PackingSolver::LowerBound() const {
  const int n = graph_.order();
  if (n <= 1) return n;
  int lb = graph_.size() > 0 ? 2 : 1;
  int longest_finite = 0;
  for (Vertex u = 0; u < n; ++u) {
    for (int x : dist_.row(u)) {
      if (x != DistanceMatrix::kUnreachable) {
        longest_finite = std::max(longest_finite, x);
      }
    }
  }
  if (longest_finite >= 3) lb = std::max(lb, 3);

  // A closed neighbourhood has pairwise distances <= 2: apart from an
  // independent subset sharing color 1, every vertex needs its own color.
  ExactSearchLimits limits{options_.max_order};
  for (Vertex v = 0; v < n; ++v) {
    const int deg = graph_.degree(v);
    if (deg == 0 || deg > limits.max_order) continue;
    auto nbrs = graph_.neighbors(v);
    Graph local = InducedSubgraph(graph_, nbrs);
    const int alpha = IndependenceNumber(local, limits);
    lb = std::max(lb, 1 + (deg + 1) - alpha);
  }

  // Diameter <= 3: colors >= 3 are single-use.
  if (diameter_ <= 3 && n <= limits.max_order) {
    const int alpha = IndependenceNumber(dist_, limits);
    const int alpha2 = TwoPackingNumber(dist_, limits);
    lb = std::max(lb, 2 + n - alpha - alpha2);
  }
  return lb;
}

ExactResult PackingSolver::Exact(int known_lower_bound) const {
  ExactResult result;
  const int n = graph_.order();
  if (n == 0) {
    result.status = SearchStatus::kSat;
    result.witness = PackingColoring();
    return result;
  }
  PackingColoring greedy = GreedyPackingColoring(graph_);
  result.upper_bound = greedy.k();
  for (int k = std::max(LowerBound(), known_lower_bound); k < greedy.k();
       ++k) {
    DecisionResult r = Decide(k);
    result.nodes += r.nodes;
    if (r.status == SearchStatus::kSat) {
      result.status = SearchStatus::kSat;
      result.value = k;
      result.witness = std::move(r.coloring);
      return result;
    }
    if (r.status == SearchStatus::kUnknown) {
      result.status = SearchStatus::kUnknown;
      result.value = k;
      return result;
    }
  }
  result.status = SearchStatus::kSat;
  result.value = greedy.k();
  result.witness = std::move(greedy);
  return result;
}

DecisionResult ChiRhoDecision(const Graph& g, int k,
                              const SearchOptions& options) {
  return PackingSolver(g, options).Decide(k);
}

ExactResult ChiRhoExact(const Graph& g, const SearchOptions& options) {
  return PackingSolver(g, options).Exact();
}

PackingColoring GreedyPackingColoring(const Graph& g) {
  const int n = g.order();
  if (n == 0) return PackingColoring();
  DistanceMatrix d = Distances(g);
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
    return g.degree(a) > g.degree(b);
  });
  std::vector<int> colors(n, 0);
  for (Vertex v : order) {
    int c = 1;
    while (true) {
      bool ok = true;
      for (Vertex u = 0; u < n && ok; ++u) {
        if (colors[u] == c && d(u, v) <= c) ok = false;
      }
      if (ok) break;
      ++c;
    }
    colors[v] = c;
  }
  return PackingColoring(std::move(colors));
}

int GreedyUpperBound(const Graph& g) { return GreedyPackingColoring(g).k(); }

std::optional<PackingColoring> RepairPackingColoring(
    const Graph& g, const std::vector<int>& candidate, int k,
    int64_t node_budget) {
  const int n = g.order();
  if (static_cast<int>(candidate.size()) != n) {
    throw GraphError("candidate coloring does not cover the graph");
  }
  SearchOptions options;
  options.max_order = std::max(options.max_order, n);
  options.node_budget = node_budget;
  PackingSolver solver(g, options);
  const DistanceMatrix& d = solver.distances();

  std::vector<char> bad(n, 0);
  bool any = false;
  for (Vertex u = 0; u < n; ++u) {
    if (candidate[u] < 1 || candidate[u] > k) bad[u] = any = true;
    for (Vertex v = u + 1; v < n; ++v) {
      if (candidate[u] == candidate[v] && d(u, v) <= candidate[u]) {
        bad[u] = bad[v] = any = true;
      }
    }
  }
  if (!any) return PackingColoring(candidate);

  for (int radius : {2, 4, 8, DistanceMatrix::kUnreachable}) {
    std::vector<int> pre = candidate;
    for (Vertex v = 0; v < n; ++v) {
      for (Vertex b = 0; b < n && pre[v] != 0; ++b) {
        if (bad[b] && d(v, b) <= radius) pre[v] = 0;
      }
    }
    DecisionResult r = solver.Complete(k, pre);
    if (r.status == SearchStatus::kSat) return std::move(r.coloring);
  }
  return std::nullopt;
}

}  // namespace sierpack
