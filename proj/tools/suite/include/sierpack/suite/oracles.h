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

// Slow reference implementations used to cross-check the library. None of
// them calls into the solver, the recognizer or the tree encoder.

#ifndef SIERPACK_SUITE_ORACLES_H_
#define SIERPACK_SUITE_ORACLES_H_

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "sierpack/graph.h"

namespace sierpack::suite {

// Packing chromatic number by plain enumeration: for k = 1, 2, ... every
// vector in [k]^n is tested against the definition. Order <= 8.
int NaiveChiRho(const Graph& g);

// Packing chromatic number by backtracking in vertex index order, each
// vertex checked only against the vertices already colored.
int BacktrackChiRho(const Graph& g);

// All-pairs distances by Floyd-Warshall (kUnreachable when disconnected).
std::vector<std::vector<int>> FloydDistances(const Graph& g);

// Largest set with pairwise distance >= min_distance by subset enumeration.
// Order <= 24.
int BruteForceDistanceSet(const Graph& g, int min_distance);

// AHU code of a free tree, computed from scratch (leaf stripping for the
// centers, recursive encoding).
std::string ReferenceTreeCode(const Graph& tree);

// All free trees of the given order up to isomorphism, order >= 1.
std::vector<Graph> FreeTrees(int order);

// Isomorphism of general graphs by backtracking with degree refinement.
bool GraphsIsomorphic(const Graph& a, const Graph& b);

// Reference codes of every product T1 ⊗_f T2 with n(T1) * n(T2) = order,
// n(T1), n(T2) >= 2, over all free trees and all maps.
std::vector<std::string> AllTreeProductCodes(int order);

// Product built edge by edge from the definition (no ProductGraph).
Graph DirectProduct(const Graph& g, const Graph& h,
                    const std::vector<Vertex>& f);

Graph RandomTree(int order, std::mt19937_64& rng);
// Connected graph: a random spanning tree plus each other pair with
// probability p.
Graph RandomConnectedGraph(int order, double p, std::mt19937_64& rng);
std::vector<Vertex> RandomImage(int base_order, int fiber_order,
                                std::mt19937_64& rng);

}  // namespace sierpack::suite

#endif  // SIERPACK_SUITE_ORACLES_H_
