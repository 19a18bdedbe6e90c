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

#include "sierpack/families.h"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace sierpack {

const char* ToString(Family f) {
  switch (f) {
    case Family::kCompletePair:
      return "complete_x_complete";
    case Family::kCompleteByK2:
      return "complete_x_K2";
    case Family::kK2ByComplete:
      return "K2_x_complete";
    case Family::kPathPath:
      return "path_x_path";
    case Family::kStarPath:
      return "star_x_path";
    case Family::kPathStar:
      return "path_x_star";
    case Family::kStarStar:
      return "star_x_star";
    case Family::kCorona:
      return "corona";
  }
  return "?";
}

const char* ToString(ValueKind k) {
  switch (k) {
    case ValueKind::kExact:
      return "exact";
    case ValueKind::kLowerBound:
      return "lower_bound";
    case ValueKind::kUpperBound:
      return "upper_bound";
    case ValueKind::kInterval:
      return "interval";
  }
  return "?";
}

const char* ToString(ConstructionStatus s) {
  switch (s) {
    case ConstructionStatus::kVerified:
      return "pattern";
    case ConstructionStatus::kRepaired:
      return "pattern+repair";
    case ConstructionStatus::kOutOfRange:
      return "construction-out-of-range";
  }
  return "?";
}

bool FamilyValue::Contains(int x) const {
  switch (kind) {
    case ValueKind::kExact:
      return x == lo;
    case ValueKind::kLowerBound:
      return x >= lo;
    case ValueKind::kUpperBound:
      return x <= hi;
    case ValueKind::kInterval:
      return lo <= x && x <= hi;
  }
  return false;
}

namespace {

FamilyValue Exact(Family family, std::vector<int> params, int value,
                  std::string source) {
  return {family, std::move(params), ValueKind::kExact, value, value,
          std::move(source)};
}

void Require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

void RequireMap(const VertexMap& f, int base_order, int fiber_order) {
  if (f.base_order() != base_order || f.fiber_order() != fiber_order) {
    throw GraphError("map " + f.ToString() + " does not fit factors of orders " +
                     std::to_string(base_order) + " and " +
                     std::to_string(fiber_order));
  }
}

// Upper bound on search nodes for one repair attempt.
constexpr int64_t kRepairBudget = 5'000'000;

Construction Finish(ProductGraph product, std::vector<int> colors, int bound,
                    bool allow_repair) {
  Construction c{std::move(product), PackingColoring(colors),
                 ConstructionStatus::kVerified, bound, std::nullopt};
  VerifyResult check = VerifyPackingColoring(c.product.graph(), c.coloring);
  if (check.ok && c.coloring.k() <= bound) return c;
  c.violation = check.violation;
  if (allow_repair) {
    auto repaired =
        RepairPackingColoring(c.product.graph(), colors, bound, kRepairBudget);
    if (repaired && VerifyPackingColoring(c.product.graph(), *repaired).ok) {
      c.coloring = std::move(*repaired);
      c.status = ConstructionStatus::kRepaired;
      return c;
    }
  }
  c.status = ConstructionStatus::kOutOfRange;
  return c;
}

}  // namespace

FamilyValue CompletePairValue(int m, int n, ChiMode mode) {
  Require(m >= 3 && n >= 3,
          "complete pair formula needs m, n >= 3; use the K2 cases");
  if (mode == ChiMode::kMin || n >= m) {
    return Exact(Family::kCompletePair, {m, n}, m * n - 2 * m + 2,
                 mode == ChiMode::kMin ? "complete_pair.min"
                                       : "complete_pair.max.n_ge_m");
  }
  return Exact(Family::kCompletePair, {m, n}, m * n - m - n + 2,
               "complete_pair.max.m_gt_n");
}

FamilyValue CompleteByK2Value(int m, int m1, int m2) {
  Require(m >= 3, "K2 fiber formula needs m >= 3");
  Require(m2 >= 0 && m1 + m2 == m, "class sizes must be >= 0 and sum to m");
  Require(m1 >= m2, "class sizes must satisfy m1 >= m2");
  if (m2 >= 2) {
    return Exact(Family::kCompleteByK2, {m, m1, m2}, 2 * m - m1 - 1,
                 "k2_fiber.partition.m2_ge_2");
  }
  return Exact(Family::kCompleteByK2, {m, m1, m2}, m + 1,
               "k2_fiber.partition.m2_le_1");
}

FamilyValue CompleteByK2ValueForMap(const VertexMap& f) {
  Require(f.fiber_order() == 2, "map must target K2");
  const int m = f.base_order();
  const int ones = static_cast<int>(std::count(f.image().begin(),
                                               f.image().end(), 1));
  const int zeros = m - ones;
  return CompleteByK2Value(m, std::max(zeros, ones), std::min(zeros, ones));
}

FamilyValue K2SpecialValue(int param, K2Side side, ChiMode mode) {
  if (side == K2Side::kBase) {
    Require(param >= 2, "K2 base value needs n >= 2");
    return Exact(Family::kK2ByComplete, {2, param}, 2 * param - 1,
                 "k2_base.stated");
  }
  Require(param >= 3, "K2 fiber value needs m >= 3");
  if (mode == ChiMode::kMin) {
    return Exact(Family::kCompleteByK2, {param, 2}, param + 1,
                 "k2_fiber.stated.min");
  }
  return Exact(Family::kCompleteByK2, {param, 2},
               2 * param - (param + 1) / 2 - 1, "k2_fiber.stated.max");
}

FamilyValue CoronaValue(int n, int p) {
  Require(n >= 1, "corona table needs n >= 1");
  Require(p >= 2, "corona table needs p >= 2");
  int value;
  std::string source;
  if (p == 2) {
    source = "corona.p2";
    value = n == 1 ? 2 : n == 2 ? 3 : n <= 4 ? 4 : n <= 11 ? 5 : 6;
  } else if (p == 3) {
    source = "corona.p3";
    value = n == 1 ? 2 : n == 2 ? 3 : n <= 4 ? 4 : n <= 8 ? 5 : 6;
  } else {
    source = "corona.p_ge_4";
    value = n == 1    ? 2
            : n == 2  ? 3
            : n <= 4  ? 4
            : n <= 8  ? 5
            : n <= 34 ? 6
                      : 7;
  }
  return Exact(Family::kCorona, {n, p}, value, source);
}

FamilyValue StarStarValue(int m, int n, ChiMode mode) {
  Require(m >= 3 && n >= 3, "star x star needs m, n >= 3");
  if (mode == ChiMode::kMin) {
    return Exact(Family::kStarStar, {m, n}, 3, "star_star.min");
  }
  return {Family::kStarStar,      {m, n},
          ValueKind::kInterval,   std::min(m, n) + 2,
          std::max(m, n) + 2,     "star_star.max"};
}

// ---------------------------------------------------------------------------

VertexMap PathPathMinMap(int m, int n) {
  Require(m >= 2 && n >= 2, "path x path needs m, n >= 2");
  std::vector<Vertex> image(m);
  for (int i = 1; i <= m; ++i) {
    image[i - 1] = (i % 4 == 1 || i % 4 == 2) ? 0 : n - 1;
  }
  return VertexMap(n, std::move(image));
}

Construction PathPathMin(int m, int n) {
  ProductGraph p(Path(m), Path(n), PathPathMinMap(m, n));
  const Graph& g = p.graph();
  if (!IsTree(g) || g.max_degree() > 2) {
    throw std::logic_error("path x path product is not a path");
  }
  Vertex start = 0;
  while (g.degree(start) != 1) ++start;
  std::vector<int> colors(g.order(), 0);
  static constexpr std::array<int, 4> kPattern = {1, 2, 1, 3};
  Vertex prev = -1;
  Vertex cur = start;
  for (int i = 0; i < g.order(); ++i) {
    colors[cur] = kPattern[i % 4];
    Vertex next = -1;
    for (Vertex w : g.neighbors(cur)) {
      if (w != prev) next = w;
    }
    prev = cur;
    cur = next;
  }
  return Finish(std::move(p), std::move(colors), 3, false);
}

SpineDecomposition SpineDecompose(const ProductGraph& p) {
  const int m = p.base().order();
  const int n = p.fiber().order();
  if (m < 2 || n < 2 || !(p.base() == Path(m)) || !(p.fiber() == Path(n))) {
    throw GraphError("spine decomposition needs a product of two paths");
  }
  const VertexMap& f = p.map();
  SpineDecomposition d;
  d.order = p.graph().order();
  std::vector<int> spine_index(d.order, -1);
  struct Segment {
    int lo, hi;
  };
  std::vector<Segment> segments(m);
  for (int j = 0; j < m; ++j) {
    const int entry = j == 0 ? f[1] : f[j - 1];
    const int exit = j == m - 1 ? f[m - 2] : f[j + 1];
    const int step = entry <= exit ? 1 : -1;
    for (int h = entry;; h += step) {
      spine_index[p.vertex_of(j, h)] = static_cast<int>(d.spine.size());
      d.spine.push_back(p.vertex_of(j, h));
      if (h == exit) break;
    }
    segments[j] = {std::min(entry, exit), std::max(entry, exit)};
  }
  d.branches.resize(d.spine.size());
  for (int j = 0; j < m; ++j) {
    const auto [lo, hi] = segments[j];
    if (lo > 0) {
      std::vector<Vertex> stub;
      for (int h = lo - 1; h >= 0; --h) stub.push_back(p.vertex_of(j, h));
      d.branches[spine_index[p.vertex_of(j, lo)]].push_back(std::move(stub));
    }
    if (hi < n - 1) {
      std::vector<Vertex> stub;
      for (int h = hi + 1; h < n; ++h) stub.push_back(p.vertex_of(j, h));
      d.branches[spine_index[p.vertex_of(j, hi)]].push_back(std::move(stub));
    }
  }
  return d;
}

namespace {

// Partition and branch-count checks shared with the coloring.
std::string CheckShape(const SpineDecomposition& d) {
  if (d.spine.empty()) return "empty spine";
  if (d.branches.size() != d.spine.size()) {
    return "branch table does not match spine length";
  }
  std::vector<int> seen(d.order, 0);
  auto mark = [&](Vertex v) {
    if (v < 0 || v >= d.order) return false;
    return ++seen[v] == 1;
  };
  for (Vertex v : d.spine) {
    if (!mark(v)) return "vertex " + std::to_string(v) + " repeated or invalid";
  }
  for (size_t i = 0; i < d.branches.size(); ++i) {
    if (d.branches[i].size() > 2) {
      return "spine vertex " + std::to_string(d.spine[i]) +
             " has more than two branches";
    }
    for (const auto& branch : d.branches[i]) {
      if (branch.empty()) return "empty branch";
      for (Vertex v : branch) {
        if (!mark(v)) {
          return "vertex " + std::to_string(v) + " repeated or invalid";
        }
      }
    }
  }
  if (std::count(seen.begin(), seen.end(), 0) > 0) {
    return "not every vertex is covered";
  }
  return {};
}

}  // namespace

std::string CheckSpineDecomposition(const Graph& tree,
                                    const SpineDecomposition& d) {
  if (!IsTree(tree)) return "input is not a tree";
  if (d.order != tree.order()) return "order mismatch";
  if (std::string shape = CheckShape(d); !shape.empty()) return shape;
  for (size_t i = 1; i < d.spine.size(); ++i) {
    if (!tree.adjacent(d.spine[i - 1], d.spine[i])) {
      return "spine is not a path";
    }
  }
  for (size_t i = 0; i < d.spine.size(); ++i) {
    for (const auto& branch : d.branches[i]) {
      Vertex prev = d.spine[i];
      for (Vertex v : branch) {
        if (!tree.adjacent(prev, v)) return "branch is not a pendant path";
        prev = v;
      }
    }
  }
  return {};
}

PackingColoring ColorClassT(const SpineDecomposition& d) {
  if (std::string shape = CheckShape(d); !shape.empty()) {
    throw GraphError("malformed spine decomposition: " + shape);
  }
  static constexpr std::array<int, 8> kSpine = {1, 4, 1, 5, 1, 6, 1, 7};
  // Indexed by distance from the spine vertex, starting at 1.
  static constexpr std::array<int, 4> kAfterOneFirst = {2, 1, 3, 1};
  static constexpr std::array<int, 4> kAfterOneSecond = {3, 1, 2, 1};
  static constexpr std::array<int, 4> kAfterBigFirst = {1, 2, 1, 3};
  static constexpr std::array<int, 4> kAfterBigSecond = {1, 3, 1, 2};
  std::vector<int> colors(d.order, 0);
  for (size_t i = 0; i < d.spine.size(); ++i) {
    const int c = kSpine[i % 8];
    colors[d.spine[i]] = c;
    for (size_t b = 0; b < d.branches[i].size(); ++b) {
      const auto& pattern = c == 1 ? (b == 0 ? kAfterOneFirst : kAfterOneSecond)
                                   : (b == 0 ? kAfterBigFirst : kAfterBigSecond);
      const auto& branch = d.branches[i][b];
      for (size_t t = 0; t < branch.size(); ++t) {
        colors[branch[t]] = pattern[t % 4];
      }
    }
  }
  return PackingColoring(std::move(colors));
}

// ---------------------------------------------------------------------------

Construction StarPathColoring(int m, int n, const VertexMap& f,
                              ConstructionMode mode) {
  Require(m >= 3 && n >= 2, "star x path needs m >= 3, n >= 2");
  RequireMap(f, m + 1, n);
  ProductGraph p(Star(m), Path(n), f);
  const Graph& g = p.graph();
  std::vector<int> colors(g.order(), 0);

  if (mode == ConstructionMode::kMin) {
    if (f != VertexMap::Constant(m + 1, n, 0)) {
      throw GraphError("min construction expects the constant map onto 0");
    }
    const auto dist = BfsDistances(g, p.vertex_of(0, 0));
    for (Vertex v = 0; v < g.order(); ++v) {
      const int d = dist[v];
      colors[v] = d % 2 == 1 ? 1 : d % 4 == 2 ? 3 : 2;
    }
    return Finish(std::move(p), std::move(colors), 3, false);
  }

  static constexpr std::array<int, 8> kSpine = {2, 4, 3, 5, 2, 6, 3, 7};
  static constexpr std::array<int, 4> kAfterBig = {1, 2, 1, 3};
  static constexpr std::array<int, 4> kAfterTwo = {1, 3, 1, 2};
  for (int h = 0; h < n; ++h) colors[p.vertex_of(0, h)] = kSpine[h % 8];
  const int w = f[0];  // attachment point inside every leaf fiber
  for (int i = 1; i <= m; ++i) {
    const int attach_color = colors[p.vertex_of(0, f[i])];
    const auto& first = attach_color == 2 ? kAfterTwo : kAfterBig;
    const auto& second = attach_color == 2 ? kAfterBig : kAfterTwo;
    // The arm towards 0 takes the first pattern, the arm towards n-1 the
    // first one too when it is the only arm, else the second.
    const bool two_arms = w > 0 && w < n - 1;
    for (int h = 0; h < n; ++h) {
      const int t = std::abs(h - w);
      const auto& pattern = (h > w && two_arms) ? second : first;
      colors[p.vertex_of(i, h)] = pattern[t % 4];
    }
  }
  return Finish(std::move(p), std::move(colors), 7, true);
}

VertexMap PathStarMinMap(int m, int n) {
  Require(m >= 2 && n >= 3, "path x star needs m >= 2, n >= 3");
  std::vector<Vertex> image(m);
  for (int i = 1; i <= m; ++i) {
    if (i % 4 == 1) {
      image[i - 1] = 0;
    } else if (i % 4 == 3) {
      image[i - 1] = 3;
    } else if (i % 8 == 2 || i % 8 == 4) {
      image[i - 1] = 1;
    } else {
      image[i - 1] = 2;
    }
  }
  return VertexMap(n + 1, std::move(image));
}

const std::vector<int>& PathStarPattern() {
  static const std::vector<int> kPattern = {
      3, 4, 7, 5, 3, 6, 4, 9, 3, 5, 7, 4, 3, 6, 8, 5,  //
      3, 4, 7, 9, 3, 5, 4, 6, 3, 8, 7, 4, 3, 5, 6, 9,  //
      3, 4, 7, 5, 3, 6, 4, 8, 3, 5, 7, 4, 3, 6, 9, 5,  //
      3, 4, 7, 8, 3, 5, 4, 6, 3, 9, 7, 4, 3, 5, 6, 8};
  return kPattern;
}

Construction PathStarColoring(int m, int n, const VertexMap& f,
                              ConstructionMode mode, bool cyclic_extension) {
  Require(m >= 2 && n >= 3, "path x star needs m >= 2, n >= 3");
  RequireMap(f, m, n + 1);
  ProductGraph p(Path(m), Star(n), f);
  const Graph& g = p.graph();
  std::vector<int> colors(g.order(), 0);

  if (mode == ConstructionMode::kMin) {
    if (f != PathStarMinMap(m, n)) {
      throw GraphError("min construction expects the periodic map");
    }
    // In fiber u_i with i = 3 (mod 4) the leaf towards u_{i-1} takes 3: it
    // carries both connecting edges, or is the end of the product.
    for (Vertex v = 0; v < g.order(); ++v) {
      const Vertex base = p.base_of(v);
      const Vertex h = p.fiber_of(v);
      if (h == 0) {
        colors[v] = f[base] == 0 ? 3 : 2;
      } else if ((base + 1) % 4 == 3 && h == f[base - 1]) {
        colors[v] = 3;
      } else {
        colors[v] = 1;
      }
    }
    return Finish(std::move(p), std::move(colors), 3, false);
  }

  const Vertex source = p.vertex_of(0, f[1]);
  const Vertex target = p.vertex_of(m - 1, f[m - 2]);
  std::vector<Vertex> parent(g.order(), -1);
  std::vector<Vertex> queue{source};
  parent[source] = source;
  for (size_t i = 0; i < queue.size(); ++i) {
    for (Vertex w : g.neighbors(queue[i])) {
      if (parent[w] < 0) {
        parent[w] = queue[i];
        queue.push_back(w);
      }
    }
  }
  std::vector<Vertex> path;
  for (Vertex v = target; v != source; v = parent[v]) path.push_back(v);
  path.push_back(source);
  std::reverse(path.begin(), path.end());

  const auto& pattern = PathStarPattern();
  if (path.size() > pattern.size() && !cyclic_extension) {
    throw std::out_of_range("path of " + std::to_string(path.size()) +
                            " vertices exceeds the " +
                            std::to_string(pattern.size()) +
                            "-entry pattern");
  }
  for (Vertex v = 0; v < g.order(); ++v) colors[v] = p.fiber_of(v) == 0 ? 2 : 1;
  for (size_t i = 0; i < path.size(); ++i) {
    colors[path[i]] = pattern[i % pattern.size()];
  }
  return Finish(std::move(p), std::move(colors), 9, false);
}

Construction StarStarColoring(int m, int n, const std::optional<VertexMap>& f) {
  Require(m >= 3 && n >= 3, "star x star needs m, n >= 3");
  if (!f) {
    ProductGraph p(Star(m), Star(n), VertexMap::Constant(m + 1, n + 1, n));
    std::vector<int> colors(p.graph().order(), 1);
    for (int i = 0; i <= m; ++i) colors[p.vertex_of(i, 0)] = 2;
    colors[p.vertex_of(0, n)] = 3;
    return Finish(std::move(p), std::move(colors), 3, false);
  }
  RequireMap(*f, m + 1, n + 1);
  ProductGraph p(Star(m), Star(n), *f);
  std::vector<int> colors(p.graph().order(), 1);
  const int bound = std::max(m, n) + 2;

  if ((*f)[0] == 0) {
    // Leaves of all fibers are independent; centers get private colors.
    for (int i = 0; i <= m; ++i) colors[p.vertex_of(i, 0)] = 2 + i;
    return Finish(std::move(p), std::move(colors), bound, false);
  }

  for (int i = 1; i <= m; ++i) colors[p.vertex_of(i, 0)] = 2;
  std::vector<char> connecting(n + 1, 0);
  for (int i = 1; i <= m; ++i) connecting[(*f)[i]] = 1;
  int next = 3;
  if (!connecting[0]) colors[p.vertex_of(0, 0)] = 2;
  for (int h = 0; h <= n; ++h) {
    if (connecting[h]) colors[p.vertex_of(0, h)] = next++;
  }
  return Finish(std::move(p), std::move(colors), bound, false);
}

}  // namespace sierpack
