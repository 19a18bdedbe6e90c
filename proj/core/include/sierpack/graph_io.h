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

// Text formats for graphs.
//
// Edge list (canonical): a header line "n m" followed by m lines "u v" with
// 0 <= u < v < n, edges sorted lexicographically, every line terminated by
// '\n'. The parser also accepts u > v, blank lines and '#' comments; the
// emitter always writes the canonical form, so emit(parse(x)) == x for
// canonical x.
//
// graph6: the standard printable encoding (optionally preceded by the
// ">>graph6<<" header); orders up to 258047 are supported.

#ifndef SIERPACK_GRAPH_IO_H_
#define SIERPACK_GRAPH_IO_H_

#include <stdexcept>
#include <string>
#include <string_view>

#include "sierpack/graph.h"

namespace sierpack {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Graph ParseEdgeList(std::string_view text);
std::string FormatEdgeList(const Graph& g);

Graph ParseGraph6(std::string_view text);
std::string FormatGraph6(const Graph& g);

// Detects graph6 input (a single token of printable graph6 characters, or
// the >>graph6<< header) and otherwise parses the edge-list format.
Graph ParseGraph(std::string_view text);

Graph ReadGraphFile(const std::string& path);
void WriteTextFile(const std::string& path, std::string_view text);

// Graphviz rendering; vertex labels are used when present.
std::string FormatDot(const Graph& g, std::string_view name = "G");

}  // namespace sierpack

#endif  // SIERPACK_GRAPH_IO_H_
