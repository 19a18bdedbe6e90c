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

// Command dispatch for the sierpack executable, kept apart from argument
// parsing so it can be driven from tests.

#ifndef SIERPACK_CLI_RUN_H_
#define SIERPACK_CLI_RUN_H_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "sierpack/graph.h"

namespace sierpack::cli {

enum class Command { kProduct, kChiRho, kSChiRho, kFamily, kRecognize,
                     kVerifyPaper };

// Exit statuses.
inline constexpr int kExitOk = 0;
inline constexpr int kExitRejected = 1;
inline constexpr int kExitParse = 2;
inline constexpr int kExitBudget = 3;

// Environment variable holding the default solver node budget.
inline constexpr const char* kBudgetEnv = "SIERPACK_BUDGET";

struct RunConfig {
  Command command = Command::kChiRho;
  std::string input;             // graph file (chirho, recognize)
  std::string base;              // graph spec (product, schirho)
  std::string fiber;
  std::optional<std::string> map;  // "nb nf: i0 i1 ..."
  std::optional<int> map_constant;
  std::string output;            // graph (product) or JSON copy
  std::string dot_output;        // product only
  std::string emit_coloring;     // family only
  std::optional<int64_t> node_budget;  // falls back to kBudgetEnv, then 0
  int64_t max_maps = 100'000'000;
  bool reduce_symmetry = false;
  bool exhaustive = false;
  std::optional<int> decision_k;
  std::string mode = "min";      // min | max
  std::string family;
  std::string params;            // "m=3,n=4"
  std::string scale = "desk";
};

// Graph from a spec: "K<n>", "P<n>", "C<n>", "S<n>" (star with n leaves),
// or else the path of a graph file. Throws ParseError.
Graph ParseGraphSpec(std::string_view spec);

// The node budget in effect: the flag, else the environment, else 0.
// Throws ParseError for a malformed or non-positive value.
int64_t EffectiveBudget(const RunConfig& config);

// Runs one command; JSON goes to `out`, diagnostics to `err`. Returns the
// exit status.
int Run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace sierpack::cli

#endif  // SIERPACK_CLI_RUN_H_
