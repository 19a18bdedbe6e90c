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

// Closed-form values and explicit colorings for products of complete graphs,
// paths and stars.
//
// Vertex conventions: Path(n) is numbered along the path, Star(n) has center
// 0 and leaves 1..n. For a star base the center is u_1; for a star fiber the
// center is fiber vertex 0. Every construction is checked with the packing
// verifier before it is returned.

#ifndef SIERPACK_FAMILIES_H_
#define SIERPACK_FAMILIES_H_

#include <optional>
#include <string>
#include <vector>

#include "sierpack/graph.h"
#include "sierpack/packing.h"
#include "sierpack/sierpinski.h"

namespace sierpack {

enum class Family {
  kCompletePair,
  kCompleteByK2,
  kK2ByComplete,
  kPathPath,
  kStarPath,
  kPathStar,
  kStarStar,
  kCorona,
};

enum class ValueKind { kExact, kLowerBound, kUpperBound, kInterval };

const char* ToString(Family f);
const char* ToString(ValueKind k);

struct FamilyValue {
  Family family;
  std::vector<int> params;  // (m, n, extras...)
  ValueKind kind = ValueKind::kExact;
  int lo = 0;  // the value for kExact and kLowerBound
  int hi = 0;  // the value for kExact and kUpperBound
  std::string source;  // citation token of the formula

  int value() const { return lo; }
  bool Contains(int x) const;
};

// m, n >= 3. kMin: mn - 2m + 2. kMax: mn - 2m + 2 if n >= m, else
// mn - m - n + 2. Throws std::invalid_argument below 3.
FamilyValue CompletePairValue(int m, int n, ChiMode mode);

// χ_ρ(K_m ⊗_f K_2) where m1 (>= m2) base vertices map to one fiber vertex
// and m2 to the other: 2m - m1 - 1 if m2 >= 2, else m + 1. Requires
// m1 + m2 = m >= 3 and rejects m1 < m2.
FamilyValue CompleteByK2Value(int m, int m1, int m2);

// The same prediction for a concrete f (the larger class becomes m1).
FamilyValue CompleteByK2ValueForMap(const VertexMap& f);

enum class K2Side { kBase, kFiber };

// Stated values for a K_2 factor: base K_2 gives 2n - 1 (n >= 2) in both
// modes; fiber K_2 gives m + 1 (min) and 2m - ceil(m/2) - 1 (max), m >= 3.
// These are the formulas as stated; see the oracle suite for computed values.
FamilyValue K2SpecialValue(int param, K2Side side, ChiMode mode);

// χ_ρ(P_n ⊙ pK_1) for p >= 2.
FamilyValue CoronaValue(int n, int p);

// m, n >= 3: min 3; max in [min(m,n)+2, max(m,n)+2].
FamilyValue StarStarValue(int m, int n, ChiMode mode);

// ---------------------------------------------------------------------------
// Constructions.

enum class ConstructionStatus {
  kVerified,    // the pattern itself is a packing coloring
  kRepaired,    // the pattern failed; local exact completion fixed it
  kOutOfRange,  // no coloring within the color bound was produced
};

const char* ToString(ConstructionStatus s);

struct Construction {
  ProductGraph product;
  // Valid for kVerified and kRepaired; for kOutOfRange the failed pattern.
  PackingColoring coloring;
  ConstructionStatus status = ConstructionStatus::kVerified;
  int color_bound = 0;  // the construction's promised number of colors
  std::optional<PackingViolation> violation;  // first violation of the pattern

  bool ok() const { return status != ConstructionStatus::kOutOfRange; }
};

enum class ConstructionMode { kMin, kMaxBound };

// g(u_i) = first path vertex if i mod 4 in {1, 2}, last otherwise (1-based
// i). P_m ⊗_g P_n is the path P_mn; it is colored 1,2,1,3,... from its
// lower-numbered end. m, n >= 2.
VertexMap PathPathMinMap(int m, int n);
Construction PathPathMin(int m, int n);

// A tree split into a spine v_1..v_k and at most two pendant paths per spine
// vertex. Each branch lists its vertices starting next to the spine.
struct SpineDecomposition {
  int order = 0;
  std::vector<Vertex> spine;
  std::vector<std::vector<std::vector<Vertex>>> branches;  // per spine index
};

// Spine of P_m ⊗_f P_n: the path from (u_1, f(u_2)) to (u_m, f(u_{m-1}))
// through every fiber; the rest of each fiber hangs off it as branches.
// Throws GraphError if p is not a product of two paths.
SpineDecomposition SpineDecompose(const ProductGraph& p);

// Empty when d is a valid decomposition of `tree`, else the reason.
std::string CheckSpineDecomposition(const Graph& tree,
                                    const SpineDecomposition& d);

// Spine 1,4,1,5,1,6,1,7,...; branches 2,1,3,1,... and 3,1,2,1,... next to
// spine vertices colored 1 and 1,2,1,3,... and 1,3,1,2,... next to the
// others. At most 7 colors. Throws GraphError on a malformed decomposition.
PackingColoring ColorClassT(const SpineDecomposition& d);

// Star base K_{1,m} (m >= 3), path fiber P_n (n >= 2).
// kMin: f must be the constant map onto path vertex 0; 3 colors.
// kMaxBound: any f; the spine u_1P_n is colored 2,4,3,5,2,6,3,7,... and the
// leaf fibers by 1,2,1,3,... or 1,3,1,2,...; at most 7 colors, repaired by
// local exact completion where the pattern does not apply.
Construction StarPathColoring(int m, int n, const VertexMap& f,
                              ConstructionMode mode);

// Path base P_m (m >= 2), star fiber K_{1,n} (n >= 3).
VertexMap PathStarMinMap(int m, int n);
// kMin: f must be PathStarMinMap; 3 colors (centers 3 where g(u_i) is the
// center and 2 elsewhere, the leaf of u_i towards u_{i-1} 3 when
// i = 3 (mod 4), all other leaves 1). kMaxBound: any f; a shortest
// path between the end fibers takes the 64-entry pattern (cyclically
// continued when `cyclic_extension`), other leaves 1, other centers 2; at
// most 9 colors. Throws std::out_of_range when the path is longer than the
// pattern and `cyclic_extension` is false.
Construction PathStarColoring(int m, int n, const VertexMap& f,
                              ConstructionMode mode,
                              bool cyclic_extension = true);

// The 64-entry path pattern.
const std::vector<int>& PathStarPattern();

// Star base K_{1,m}, star fiber K_{1,n}, m, n >= 3. Without f: the constant
// map onto the last leaf with its 3-coloring. With f: at most max(m,n)+2
// colors.
Construction StarStarColoring(int m, int n,
                              const std::optional<VertexMap>& f = {});

}  // namespace sierpack

#endif  // SIERPACK_FAMILIES_H_
