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

#include <iostream>

#include "CLI11.hpp"
#include "sierpack/cli/run.h"

namespace {

using sierpack::cli::Command;
using sierpack::cli::RunConfig;

void AddMapOptions(CLI::App* app, RunConfig& c) {
  app->add_option("--map", c.map, "connecting map \"nb nf: i0 i1 ...\"");
  app->add_option("--map-constant", c.map_constant,
                  "constant connecting map onto this fiber vertex");
}

void AddBudget(CLI::App* app, RunConfig& c) {
  app->add_option("--budget", c.node_budget,
                  "solver node budget per decision (default: $SIERPACK_BUDGET, "
                  "else unlimited)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sierpinski products, packing colorings and tree-product "
               "recognition"};
  app.require_subcommand(1);
  RunConfig c;

  auto* product = app.add_subcommand("product", "build G (x)_f H");
  product->add_option("--base", c.base, "K<n>, P<n>, C<n>, S<n> or a file")
      ->required();
  product->add_option("--fiber", c.fiber, "K<n>, P<n>, C<n>, S<n> or a file")
      ->required();
  AddMapOptions(product, c);
  product->add_option("-o,--out", c.output, "write the edge list here");
  product->add_option("--dot", c.dot_output, "write Graphviz DOT here");

  auto* chirho = app.add_subcommand("chirho", "exact packing chromatic number");
  chirho->add_option("graph", c.input, "graph file (edge list or graph6)")
      ->required();
  chirho->add_option("--decision", c.decision_k,
                     "only decide whether k colors suffice");
  AddBudget(chirho, c);
  chirho->add_option("--json", c.output, "also write the JSON here");

  auto* schirho = app.add_subcommand(
      "schirho", "min or max of the packing chromatic number over all maps");
  schirho->add_option("--base", c.base)->required();
  schirho->add_option("--fiber", c.fiber)->required();
  schirho->add_option("--mode", c.mode, "min or max")
      ->check(CLI::IsMember({"min", "max"}));
  schirho->add_flag("--reduce-symmetry", c.reduce_symmetry,
                    "enumerate one map per automorphism orbit");
  schirho->add_option("--max-maps", c.max_maps, "enumeration bound");
  AddBudget(schirho, c);
  schirho->add_option("--json", c.output, "also write the JSON here");

  auto* family = app.add_subcommand("family", "closed forms and constructions");
  family->add_option("name", c.family, "family name")->required();
  family->add_option("--params", c.params, "m=..,n=..")->required();
  family->add_option("--mode", c.mode, "min or max")
      ->check(CLI::IsMember({"min", "max"}));
  family->add_option("--emit-coloring", c.emit_coloring,
                     "write the constructed coloring here");
  AddMapOptions(family, c);
  AddBudget(family, c);
  family->add_option("--json", c.output, "also write the JSON here");

  auto* recognize = app.add_subcommand(
      "recognize", "decide whether a tree is a product of two trees");
  recognize->add_option("graph", c.input, "graph file")->required();
  recognize->add_flag("--exhaustive", c.exhaustive,
                      "backtrack over all peel orders");
  recognize->add_option("--json", c.output, "also write the JSON here");

  auto* verify = app.add_subcommand("verify-paper",
                                    "run the acceptance cross-checks");
  verify->add_option("--scale", c.scale, "quick or desk")
      ->check(CLI::IsMember({"quick", "desk"}));
  verify->add_option("--json", c.output, "also write the report here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return sierpack::cli::kExitParse;
  }

  if (product->parsed()) c.command = Command::kProduct;
  if (chirho->parsed()) c.command = Command::kChiRho;
  if (schirho->parsed()) c.command = Command::kSChiRho;
  if (family->parsed()) c.command = Command::kFamily;
  if (recognize->parsed()) c.command = Command::kRecognize;
  if (verify->parsed()) c.command = Command::kVerifyPaper;
  return sierpack::cli::Run(c, std::cout, std::cerr);
}
