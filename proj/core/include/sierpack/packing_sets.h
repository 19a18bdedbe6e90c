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

// Exact independence and 2-packing numbers. Both are the same search: the
// largest vertex set whose pairwise distances are at least a threshold
// (2 for independent sets, 3 for 2-packings).

#ifndef SIERPACK_PACKING_SETS_H_
#define SIERPACK_PACKING_SETS_H_

#include <vector>

#include "sierpack/graph.h"

namespace sierpack {

struct ExactSearchLimits {
  // Largest order accepted by the exact subset search.
  int max_order = 40;
};

// Largest set with pairwise distance >= min_distance. Throws SizeError above
// limits.max_order.
std::vector<Vertex> LargestDistanceSet(const DistanceMatrix& d,
                                       int min_distance,
                                       const ExactSearchLimits& limits = {});

// α(g).
int IndependenceNumber(const Graph& g, const ExactSearchLimits& limits = {});
int IndependenceNumber(const DistanceMatrix& d,
                       const ExactSearchLimits& limits = {});

// α₂(g): largest set with pairwise distance >= 3.
int TwoPackingNumber(const Graph& g, const ExactSearchLimits& limits = {});
int TwoPackingNumber(const DistanceMatrix& d,
                     const ExactSearchLimits& limits = {});

}  // namespace sierpack

#endif  // SIERPACK_PACKING_SETS_H_
