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

#include "sierpack/packing_sets.h"

#include <bit>
#include <cstdint>
#include <string>

namespace sierpack {
namespace {

// Vertex sets as fixed-width word arrays; order is bounded by the limits so
// the width is small.
class VertexSet {
 public:
  explicit VertexSet(int n) : words_((n + 63) / 64, 0) {}

  void insert(int v) { words_[v >> 6] |= uint64_t{1} << (v & 63); }
  void erase(int v) { words_[v >> 6] &= ~(uint64_t{1} << (v & 63)); }
  bool contains(int v) const { return (words_[v >> 6] >> (v & 63)) & 1; }

  int count() const {
    int c = 0;
    for (uint64_t w : words_) c += std::popcount(w);
    return c;
  }
  bool empty() const {
    for (uint64_t w : words_) {
      if (w) return false;
    }
    return true;
  }
  int CountIntersection(const VertexSet& other) const {
    int c = 0;
    for (size_t i = 0; i < words_.size(); ++i) {
      c += std::popcount(words_[i] & other.words_[i]);
    }
    return c;
  }
  void Subtract(const VertexSet& other) {
    for (size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  }

  template <typename Fn>
  void ForEach(Fn&& fn) const {
    for (size_t i = 0; i < words_.size(); ++i) {
      uint64_t w = words_[i];
      while (w) {
        fn(static_cast<int>(i * 64 + std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

 private:
  std::vector<uint64_t> words_;
};

class MaxDistanceSetSearch {
 public:
  MaxDistanceSetSearch(const DistanceMatrix& d, int min_distance)
      : n_(d.order()) {
    conflicts_.assign(n_, VertexSet(n_));
    for (int u = 0; u < n_; ++u) {
      for (int v = 0; v < n_; ++v) {
        if (u != v && d(u, v) < min_distance) conflicts_[u].insert(v);
      }
    }
  }

  std::vector<Vertex> Run() {
    VertexSet all(n_);
    for (int v = 0; v < n_; ++v) all.insert(v);
    Recurse(all);
    return best_;
  }

 private:
  void Recurse(VertexSet candidates) {
    if (current_.size() + candidates.count() <= best_.size()) return;
    // Vertices without conflicts among the candidates are always taken.
    int pick = -1;
    int pick_degree = n_ + 1;
    size_t forced = 0;
    std::vector<int> free_vertices;
    candidates.ForEach([&](int v) {
      int deg = conflicts_[v].CountIntersection(candidates);
      if (deg == 0) {
        free_vertices.push_back(v);
      } else if (deg < pick_degree) {
        pick_degree = deg;
        pick = v;
      }
    });
    for (int v : free_vertices) {
      current_.push_back(v);
      candidates.erase(v);
      ++forced;
    }
    if (pick < 0) {
      if (current_.size() > best_.size()) best_ = current_;
    } else {
      VertexSet with = candidates;
      with.erase(pick);
      with.Subtract(conflicts_[pick]);
      current_.push_back(pick);
      Recurse(with);
      current_.pop_back();

      VertexSet without = candidates;
      without.erase(pick);
      Recurse(without);
    }
    current_.resize(current_.size() - forced);
  }

  int n_;
  std::vector<VertexSet> conflicts_;
  std::vector<Vertex> current_;
  std::vector<Vertex> best_;
};

}  // namespace

std::vector<Vertex> LargestDistanceSet(const DistanceMatrix& d,
                                       int min_distance,
                                       const ExactSearchLimits& limits) {
  if (d.order() > limits.max_order) {
    throw SizeError("exact subset search limited to " +
                    std::to_string(limits.max_order) + " vertices, got " +
                    std::to_string(d.order()));
  }
  if (d.order() == 0) return {};
  return MaxDistanceSetSearch(d, min_distance).Run();
}

int IndependenceNumber(const DistanceMatrix& d,
                       const ExactSearchLimits& limits) {
  return static_cast<int>(LargestDistanceSet(d, 2, limits).size());
}

int IndependenceNumber(const Graph& g, const ExactSearchLimits& limits) {
  if (g.order() > limits.max_order) {
    throw SizeError("exact subset search limited to " +
                    std::to_string(limits.max_order) + " vertices");
  }
  return IndependenceNumber(Distances(g), limits);
}

int TwoPackingNumber(const DistanceMatrix& d, const ExactSearchLimits& limits) {
  return static_cast<int>(LargestDistanceSet(d, 3, limits).size());
}

int TwoPackingNumber(const Graph& g, const ExactSearchLimits& limits) {
  if (g.order() > limits.max_order) {
    throw SizeError("exact subset search limited to " +
                    std::to_string(limits.max_order) + " vertices");
  }
  return TwoPackingNumber(Distances(g), limits);
}

}  // namespace sierpack
