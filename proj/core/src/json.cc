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

#include "sierpack/json.h"

namespace sierpack {

Json ColoringToJson(const Graph& g, const PackingColoring& c) {
  return {{"order", c.order()},
          {"k", c.k()},
          {"colors", c.colors()},
          {"verified", VerifyPackingColoring(g, c).ok}};
}

PackingColoring ColoringFromJson(const Json& j, const Graph& g) {
  PackingColoring c(j.at("colors").get<std::vector<int>>());
  if (j.contains("order") && j.at("order").get<int>() != c.order()) {
    throw GraphError("coloring order field disagrees with its colors");
  }
  auto check = VerifyPackingColoring(g, c);
  if (!check.ok) {
    const auto& v = *check.violation;
    throw GraphError("stored coloring is not a packing coloring: vertices " +
                     std::to_string(v.u) + " and " + std::to_string(v.v) +
                     " share color " + std::to_string(v.color) +
                     " at distance " + std::to_string(v.distance));
  }
  return c;
}

Json EdgesToJson(const Graph& g) {
  Json edges = Json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
  return edges;
}

Json FamilyValueToJson(const FamilyValue& v) {
  Json j = {{"family", ToString(v.family)},
            {"params", v.params},
            {"kind", ToString(v.kind)},
            {"source", v.source}};
  if (v.kind == ValueKind::kExact) {
    j["value"] = v.lo;
  } else {
    j["lo"] = v.lo;
    j["hi"] = v.hi;
  }
  return j;
}

Json FactorizationToJson(const Factorization& f) {
  return {{"n1", f.base.order()},
          {"n2", f.fiber.order()},
          {"base_edges", EdgesToJson(f.base)},
          {"fiber_edges", EdgesToJson(f.fiber)},
          {"map", f.map.ToString()}};
}

Json RecognitionToJson(const RecognitionOutcome& r) {
  Json factorizations = Json::array();
  for (const auto& f : r.factorizations) {
    factorizations.push_back(FactorizationToJson(f));
  }
  Json diagnostics = Json::array();
  for (const auto& d : r.diagnostics) {
    diagnostics.push_back({{"n1", d.n1},
                           {"n2", d.n2},
                           {"ok", d.reason.empty()},
                           {"reason", d.reason}});
  }
  return {{"status", ToString(r.status)},
          {"factorizations", factorizations},
          {"diagnostics", diagnostics}};
}

}  // namespace sierpack
