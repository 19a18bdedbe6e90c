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

// JSON forms of results. A coloring is {order, k, colors, verified}; it is
// verified again whenever it is loaded.

#ifndef SIERPACK_JSON_H_
#define SIERPACK_JSON_H_

#include <nlohmann/json.hpp>

#include "sierpack/families.h"
#include "sierpack/graph.h"
#include "sierpack/packing.h"
#include "sierpack/recognize.h"
#include "sierpack/sierpinski.h"

namespace sierpack {

using Json = nlohmann::json;

Json ColoringToJson(const Graph& g, const PackingColoring& c);
// Throws GraphError when the stored coloring does not verify on g.
PackingColoring ColoringFromJson(const Json& j, const Graph& g);

Json EdgesToJson(const Graph& g);
Json FamilyValueToJson(const FamilyValue& v);
Json FactorizationToJson(const Factorization& f);
Json RecognitionToJson(const RecognitionOutcome& r);

}  // namespace sierpack

#endif  // SIERPACK_JSON_H_
