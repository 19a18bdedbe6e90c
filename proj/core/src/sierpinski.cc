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

#include "sierpack/sierpinski.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <sstream>

#include "sierpack/graph_io.h"

namespace sierpack {

VertexMap::VertexMap(int fiber_order, std::vector<Vertex> image)
    : fiber_order_(fiber_order), image_(std::move(image)) {
  if (fiber_order_ < 0) throw GraphError("negative fiber order");
  for (Vertex x : image_) {
    if (x < 0 || x >= fiber_order_) {
      throw GraphError("map image " + std::to_string(x) +
                       " outside fiber of order " +
                       std::to_string(fiber_order_));
    }
  }
}

VertexMap VertexMap::Constant(int base_order, int fiber_order, Vertex value) {
  if (base_order < 0) throw GraphError("negative base order");
  return VertexMap(fiber_order, std::vector<Vertex>(base_order, value));
}

VertexMap VertexMap::Parse(std::string_view text) {
  auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw ParseError("map: expected 'n_base n_fiber: images'");
  }
  auto read_ints = [](std::string_view s) {
    std::vector<long long> out;
    size_t i = 0;
    while (i < s.size()) {
      if (std::isspace(static_cast<unsigned char>(s[i]))) {
        ++i;
        continue;
      }
      long long value = 0;
      auto [ptr, ec] = std::from_chars(s.data() + i, s.data() + s.size(), value);
      if (ec != std::errc()) throw ParseError("map: expected integers");
      out.push_back(value);
      i = ptr - s.data();
      if (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i]))) {
        throw ParseError("map: expected integers");
      }
    }
    return out;
  };
  auto head = read_ints(text.substr(0, colon));
  auto body = read_ints(text.substr(colon + 1));
  if (head.size() != 2 || head[0] < 0 || head[1] < 1) {
    throw ParseError("map: malformed header");
  }
  if (static_cast<long long>(body.size()) != head[0]) {
    throw ParseError("map: expected " + std::to_string(head[0]) +
                     " images, got " + std::to_string(body.size()));
  }
  std::vector<Vertex> image;
  for (long long x : body) {
    if (x < 0 || x >= head[1]) throw ParseError("map: image out of range");
    image.push_back(static_cast<Vertex>(x));
  }
  return VertexMap(static_cast<int>(head[1]), std::move(image));
}

std::string VertexMap::ToString() const {
  std::ostringstream out;
  out << base_order() << ' ' << fiber_order_ << ':';
  for (Vertex x : image_) out << ' ' << x;
  return out.str();
}

ProductGraph::ProductGraph(Graph base, Graph fiber, VertexMap map)
    : base_(std::move(base)), fiber_(std::move(fiber)), map_(std::move(map)) {
  if (map_.base_order() != base_.order() ||
      map_.fiber_order() != fiber_.order()) {
    throw GraphError("map " + std::to_string(map_.base_order()) + "->" +
                     std::to_string(map_.fiber_order()) +
                     " does not match factors of orders " +
                     std::to_string(base_.order()) + " and " +
                     std::to_string(fiber_.order()));
  }
  const int nh = fiber_.order();
  const auto fiber_edges = fiber_.edges();
  std::vector<Edge> edges;
  edges.reserve(static_cast<size_t>(base_.order()) * fiber_edges.size() +
                base_.size());
  for (Vertex g = 0; g < base_.order(); ++g) {
    for (const auto& [a, b] : fiber_edges) {
      edges.emplace_back(g * nh + a, g * nh + b);
    }
  }
  for (const auto& [g, g2] : base_.edges()) {
    Vertex u = vertex_of(g, map_[g2]);
    Vertex v = vertex_of(g2, map_[g]);
    connecting_.push_back({{std::min(u, v), std::max(u, v)}, {g, g2}});
    edges.emplace_back(u, v);
  }
  std::vector<std::string> labels(static_cast<size_t>(base_.order()) * nh);
  for (Vertex v = 0; v < static_cast<Vertex>(labels.size()); ++v) {
    labels[v] = std::to_string(base_of(v)) + "," + std::to_string(fiber_of(v));
  }
  graph_ = Graph(base_.order() * nh, edges).WithLabels(std::move(labels));
}

EdgeKind ProductGraph::edge_kind(Vertex u, Vertex v) const {
  if (!graph_.adjacent(u, v)) {
    throw GraphError("(" + std::to_string(u) + "," + std::to_string(v) +
                     ") is not an edge of the product");
  }
  return base_of(u) == base_of(v) ? EdgeKind::kType1 : EdgeKind::kType2;
}

ProductGraph SierpinskiProduct(const Graph& g, const Graph& h,
                               const VertexMap& f) {
  return ProductGraph(g, h, f);
}

std::vector<ConnectingEdge> ConnectingEdges(const ProductGraph& p) {
  return p.connecting_edges();
}

// ---------------------------------------------------------------------------

namespace {

constexpr int kBruteForceAutOrder = 10;

void CollectAutomorphisms(const Graph& g, Vertex v, Permutation& perm,
                          std::vector<char>& used,
                          std::vector<Permutation>& out, int64_t limit) {
  const int n = g.order();
  if (v == n) {
    if (static_cast<int64_t>(out.size()) >= limit) {
      throw SizeError("more than " + std::to_string(limit) +
                      " automorphisms");
    }
    out.push_back(perm);
    return;
  }
  for (Vertex w = 0; w < n; ++w) {
    if (used[w] || g.degree(w) != g.degree(v)) continue;
    bool ok = true;
    for (Vertex u = 0; u < v && ok; ++u) {
      ok = g.adjacent(u, v) == g.adjacent(perm[u], w);
    }
    if (!ok) continue;
    perm[v] = w;
    used[w] = 1;
    CollectAutomorphisms(g, v + 1, perm, used, out, limit);
    used[w] = 0;
  }
}

void AllPermutationsOf(std::vector<Vertex> movable, const Permutation& base,
                       std::vector<Permutation>& out, int64_t limit) {
  std::vector<Vertex> images = movable;
  do {
    if (static_cast<int64_t>(out.size()) >= limit) {
      throw SizeError("more than " + std::to_string(limit) +
                      " automorphisms");
    }
    Permutation p = base;
    for (size_t i = 0; i < movable.size(); ++i) p[movable[i]] = images[i];
    out.push_back(std::move(p));
  } while (std::next_permutation(images.begin(), images.end()));
}

}  // namespace

std::vector<Permutation> Automorphisms(const Graph& g, int64_t limit) {
  const int n = g.order();
  std::vector<Permutation> out;
  Permutation identity(n);
  std::iota(identity.begin(), identity.end(), 0);
  if (n <= kBruteForceAutOrder) {
    Permutation perm(n);
    std::vector<char> used(n, 0);
    CollectAutomorphisms(g, 0, perm, used, out, limit);
    // The search visits images in increasing order, so the identity is first.
    return out;
  }
  const int64_t full = static_cast<int64_t>(n) * (n - 1) / 2;
  if (g.size() == full) {
    AllPermutationsOf(identity, identity, out, limit);
    return out;
  }
  if (IsTree(g) && g.max_degree() <= 2) {
    Vertex end = 0;
    while (g.degree(end) != 1) ++end;
    std::vector<Vertex> walk{end};
    Vertex prev = -1;
    while (static_cast<int>(walk.size()) < n) {
      for (Vertex w : g.neighbors(walk.back())) {
        if (w != prev) {
          prev = walk.back();
          walk.push_back(w);
          break;
        }
      }
    }
    Permutation reverse(n);
    for (int i = 0; i < n; ++i) reverse[walk[i]] = walk[n - 1 - i];
    out = {identity, reverse};
    return out;
  }
  if (IsTree(g) && g.max_degree() == n - 1) {
    std::vector<Vertex> leaves;
    for (Vertex v = 0; v < n; ++v) {
      if (g.degree(v) == 1) leaves.push_back(v);
    }
    AllPermutationsOf(leaves, identity, out, limit);
    return out;
  }
  throw SizeError("automorphism search limited to order " +
                  std::to_string(kBruteForceAutOrder) +
                  " outside complete graphs, paths and stars");
}

MapEnumerator::MapEnumerator(const Graph& g, const Graph& h,
                             const EnumerationOptions& options)
    : base_order_(g.order()),
      fiber_order_(h.order()),
      reduce_(options.reduce_symmetry) {
  total_ = 1;
  for (int i = 0; i < base_order_; ++i) {
    if (fiber_order_ == 0) {
      total_ = 0;
      break;
    }
    if (total_ > options.max_maps / fiber_order_) {
      throw SizeError("enumeration of " + std::to_string(fiber_order_) + "^" +
                      std::to_string(base_order_) + " maps exceeds bound " +
                      std::to_string(options.max_maps));
    }
    total_ *= fiber_order_;
  }
  if (total_ > options.max_maps) {
    throw SizeError("enumeration exceeds bound " +
                    std::to_string(options.max_maps));
  }
  done_ = total_ == 0;
  if (reduce_) {
    base_aut_ = Automorphisms(g);
    fiber_aut_ = Automorphisms(h);
    if (static_cast<int64_t>(base_aut_.size()) *
            static_cast<int64_t>(fiber_aut_.size()) >
        options.max_group_product) {
      throw SizeError("symmetry group too large for orbit reduction");
    }
  }
  current_.assign(base_order_, 0);
}

bool MapEnumerator::Advance() {
  if (!started_) {
    started_ = true;
    return !done_;
  }
  for (int i = base_order_ - 1; i >= 0; --i) {
    if (++current_[i] < fiber_order_) return true;
    current_[i] = 0;
  }
  done_ = true;
  return false;
}

bool MapEnumerator::IsOrbitMinimum(const std::vector<Vertex>& image) const {
  for (const auto& pi : base_aut_) {
    for (const auto& sigma : fiber_aut_) {
      for (int g = 0; g < base_order_; ++g) {
        Vertex x = sigma[image[pi[g]]];
        if (x < image[g]) return false;
        if (x > image[g]) break;
      }
    }
  }
  return true;
}

bool MapEnumerator::Next(VertexMap* out) {
  while (!done_ && Advance()) {
    if (reduce_ && !IsOrbitMinimum(current_)) continue;
    ++emitted_;
    *out = VertexMap(fiber_order_, current_);
    return true;
  }
  return false;
}

std::vector<VertexMap> EnumerateMaps(const Graph& g, const Graph& h,
                                     const EnumerationOptions& options) {
  MapEnumerator e(g, h, options);
  std::vector<VertexMap> out;
  VertexMap f;
  while (e.Next(&f)) out.push_back(f);
  return out;
}

// ---------------------------------------------------------------------------

const char* ToString(ChiMode mode) {
  return mode == ChiMode::kMin ? "min" : "max";
}

ChiResult SierpinskiChi(const Graph& g, const Graph& h, ChiMode mode,
                        const ChiOptions& options) {
  if (g.order() == 0 || h.order() == 0) {
    throw GraphError("Sierpinski product needs non-empty factors");
  }
  ChiResult result;
  MapEnumerator maps(g, h, options.enumeration);
  VertexMap f;
  auto record = [&](const VertexMap& map, ExactResult exact) {
    result.value = exact.value;
    result.map = map;
    result.coloring = std::move(exact.witness);
  };
  auto partial = [&]() {
    result.status = SearchStatus::kUnknown;
    return result;
  };
  while (maps.Next(&f)) {
    ProductGraph p(g, h, f);
    PackingSolver solver(p.graph(), options.search);
    ++result.maps_explored;
    const bool first = !result.map.has_value();
    if (mode == ChiMode::kMin) {
      if (!first) {
        if (solver.LowerBound() >= result.value) continue;
        DecisionResult d = solver.Decide(result.value - 1);
        result.nodes += d.nodes;
        if (d.status == SearchStatus::kUnknown) return partial();
        if (d.status == SearchStatus::kUnsat) continue;
      }
      ExactResult exact = solver.Exact();
      result.nodes += exact.nodes;
      if (exact.status != SearchStatus::kSat) return partial();
      if (first || exact.value < result.value) record(f, std::move(exact));
    } else {
      int known_lower = 0;
      if (!first) {
        if (GreedyUpperBound(p.graph()) <= result.value) continue;
        DecisionResult d = solver.Decide(result.value);
        result.nodes += d.nodes;
        if (d.status == SearchStatus::kUnknown) return partial();
        if (d.status == SearchStatus::kSat) continue;
        known_lower = result.value + 1;
      }
      ExactResult exact = solver.Exact(known_lower);
      result.nodes += exact.nodes;
      if (exact.status != SearchStatus::kSat) return partial();
      if (first || exact.value > result.value) record(f, std::move(exact));
    }
  }
  result.status = SearchStatus::kSat;
  return result;
}

}  // namespace sierpack
