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

#include "sierpack/suite/oracles.h"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <stdexcept>

namespace sierpack::suite {
namespace {

constexpr int kInf = DistanceMatrix::kUnreachable;

bool IsPacking(const std::vector<std::vector<int>>& d,
               const std::vector<int>& c) {
  const int n = static_cast<int>(c.size());
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (c[u] == c[v] && d[u][v] <= c[u]) return false;
    }
  }
  return true;
}

bool Extend(const std::vector<std::vector<int>>& d, int k, int v,
            std::vector<int>& c) {
  const int n = static_cast<int>(c.size());
  if (v == n) return true;
  for (int color = 1; color <= k; ++color) {
    bool ok = true;
    for (int u = 0; u < v && ok; ++u) {
      if (c[u] == color && d[u][v] <= color) ok = false;
    }
    if (!ok) continue;
    c[v] = color;
    if (Extend(d, k, v + 1, c)) return true;
  }
  c[v] = 0;
  return false;
}

std::string Encode(const Graph& t, Vertex v, Vertex parent) {
  std::vector<std::string> kids;
  for (Vertex w : t.neighbors(v)) {
    if (w != parent) kids.push_back(Encode(t, w, v));
  }
  std::sort(kids.begin(), kids.end());
  std::string out = "(";
  for (const auto& k : kids) out += k;
  return out + ")";
}

bool MatchFrom(const Graph& a, const Graph& b, int i,
               std::vector<Vertex>& map, std::vector<bool>& used) {
  const int n = a.order();
  if (i == n) return true;
  for (Vertex cand = 0; cand < n; ++cand) {
    if (used[cand] || a.degree(i) != b.degree(cand)) continue;
    bool ok = true;
    for (int j = 0; j < i && ok; ++j) {
      if (a.adjacent(i, j) != b.adjacent(cand, map[j])) ok = false;
    }
    if (!ok) continue;
    map[i] = cand;
    used[cand] = true;
    if (MatchFrom(a, b, i + 1, map, used)) return true;
    used[cand] = false;
  }
  return false;
}

}  // namespace

std::vector<std::vector<int>> FloydDistances(const Graph& g) {
  const int n = g.order();
  std::vector<std::vector<int>> d(n, std::vector<int>(n, kInf));
  for (int v = 0; v < n; ++v) {
    d[v][v] = 0;
    for (Vertex w : g.neighbors(v)) d[v][w] = 1;
  }
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      if (d[i][k] == kInf) continue;
      for (int j = 0; j < n; ++j) {
        if (d[k][j] == kInf) continue;
        d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
      }
    }
  }
  return d;
}

int NaiveChiRho(const Graph& g) {
  const int n = g.order();
  if (n > 8) throw std::length_error("naive oracle is limited to order 8");
  if (n == 0) return 0;
  const auto d = FloydDistances(g);
  for (int k = 1; k <= n; ++k) {
    std::vector<int> c(n, 1);
    while (true) {
      if (IsPacking(d, c)) return k;
      int i = 0;
      while (i < n && c[i] == k) c[i++] = 1;
      if (i == n) break;
      ++c[i];
    }
  }
  return n;
}

int BacktrackChiRho(const Graph& g) {
  const int n = g.order();
  if (n == 0) return 0;
  const auto d = FloydDistances(g);
  for (int k = 1; k <= n; ++k) {
    std::vector<int> c(n, 0);
    if (Extend(d, k, 0, c)) return k;
  }
  return n;
}

int BruteForceDistanceSet(const Graph& g, int min_distance) {
  const int n = g.order();
  if (n > 24) throw std::length_error("subset oracle is limited to order 24");
  const auto d = FloydDistances(g);
  int best = 0;
  for (uint32_t s = 1; s < (1u << n); ++s) {
    const int size = std::popcount(s);
    if (size <= best) continue;
    bool ok = true;
    for (int u = 0; u < n && ok; ++u) {
      if (!(s >> u & 1)) continue;
      for (int v = u + 1; v < n && ok; ++v) {
        if ((s >> v & 1) && d[u][v] < min_distance) ok = false;
      }
    }
    if (ok) best = size;
  }
  return best;
}

std::string ReferenceTreeCode(const Graph& tree) {
  const int n = tree.order();
  if (n == 0) return "";
  std::vector<int> deg(n);
  std::vector<Vertex> layer;
  for (int v = 0; v < n; ++v) {
    deg[v] = tree.degree(v);
    if (deg[v] <= 1) layer.push_back(v);
  }
  int remaining = n;
  while (remaining > 2) {
    remaining -= static_cast<int>(layer.size());
    std::vector<Vertex> next;
    for (Vertex v : layer) {
      for (Vertex w : tree.neighbors(v)) {
        if (--deg[w] == 1) next.push_back(w);
      }
    }
    layer = std::move(next);
  }
  std::string best;
  for (Vertex c : layer) {
    std::string code = Encode(tree, c, -1);
    if (best.empty() || code < best) best = code;
  }
  return best;
}

std::vector<Graph> FreeTrees(int order) {
  if (order < 1) throw std::invalid_argument("order must be positive");
  std::vector<Graph> trees{Graph(1, {})};
  for (int n = 2; n <= order; ++n) {
    std::set<std::string> seen;
    std::vector<Graph> next;
    for (const Graph& t : trees) {
      auto edges = t.edges();
      for (Vertex v = 0; v < t.order(); ++v) {
        auto e = edges;
        e.emplace_back(v, n - 1);
        Graph grown(n, e);
        if (seen.insert(ReferenceTreeCode(grown)).second) {
          next.push_back(std::move(grown));
        }
      }
    }
    trees = std::move(next);
  }
  return trees;
}

bool GraphsIsomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  std::vector<int> da, db;
  for (int v = 0; v < a.order(); ++v) {
    da.push_back(a.degree(v));
    db.push_back(b.degree(v));
  }
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return false;
  std::vector<Vertex> map(a.order(), -1);
  std::vector<bool> used(a.order(), false);
  return MatchFrom(a, b, 0, map, used);
}

Graph DirectProduct(const Graph& g, const Graph& h,
                    const std::vector<Vertex>& f) {
  const int nh = h.order();
  std::vector<Edge> edges;
  for (Vertex x = 0; x < g.order(); ++x) {
    for (auto [a, b] : h.edges()) edges.emplace_back(x * nh + a, x * nh + b);
  }
  for (auto [x, y] : g.edges()) {
    edges.emplace_back(x * nh + f[y], y * nh + f[x]);
  }
  return Graph(g.order() * nh, edges);
}

std::vector<std::string> AllTreeProductCodes(int order) {
  std::set<std::string> codes;
  for (int n1 = 2; n1 <= order / 2; ++n1) {
    if (order % n1 != 0) continue;
    const int n2 = order / n1;
    const auto bases = FreeTrees(n1);
    const auto fibers = FreeTrees(n2);
    for (const Graph& t1 : bases) {
      for (const Graph& t2 : fibers) {
        std::vector<Vertex> f(n1, 0);
        while (true) {
          codes.insert(ReferenceTreeCode(DirectProduct(t1, t2, f)));
          int i = 0;
          while (i < n1 && f[i] == n2 - 1) f[i++] = 0;
          if (i == n1) break;
          ++f[i];
        }
      }
    }
  }
  return {codes.begin(), codes.end()};
}

Graph RandomTree(int order, std::mt19937_64& rng) {
  std::vector<Vertex> perm(order);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<Edge> edges;
  for (int v = 1; v < order; ++v) {
    std::uniform_int_distribution<int> pick(0, v - 1);
    edges.emplace_back(perm[pick(rng)], perm[v]);
  }
  return Graph(order, edges);
}

Graph RandomConnectedGraph(int order, double p, std::mt19937_64& rng) {
  auto edges = RandomTree(order, rng).edges();
  std::set<Edge> have;
  for (auto [u, v] : edges) have.insert({std::min(u, v), std::max(u, v)});
  std::bernoulli_distribution coin(p);
  for (int u = 0; u < order; ++u) {
    for (int v = u + 1; v < order; ++v) {
      if (!have.count({u, v}) && coin(rng)) edges.emplace_back(u, v);
    }
  }
  return Graph(order, edges);
}

std::vector<Vertex> RandomImage(int base_order, int fiber_order,
                                std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick(0, fiber_order - 1);
  std::vector<Vertex> image(base_order);
  for (auto& x : image) x = pick(rng);
  return image;
}

}  // namespace sierpack::suite
