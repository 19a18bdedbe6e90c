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

// Tree isomorphism by canonical encoding: each subtree is encoded as the
// sorted concatenation of its children's encodings (AHU), and a free tree is
// encoded from its center, taking the smaller code when there are two.

#ifndef SIERPACK_TREE_ISO_H_
#define SIERPACK_TREE_ISO_H_

#include <span>
#include <string>
#include <vector>

#include "sierpack/graph.h"

namespace sierpack {

// One or two centers of a tree (vertices of minimum eccentricity).
std::vector<Vertex> TreeCenters(const Graph& tree);

// Canonical code of `tree` rooted at `root`. When `vertex_tags` is non-empty
// each vertex's tag becomes part of its code, so equal codes mean an
// isomorphism that also preserves tags.
std::string RootedTreeCode(const Graph& tree, Vertex root,
                           std::span<const std::string> vertex_tags = {});

// Canonical code of a free tree. Throws GraphError if `tree` is not a tree.
std::string CanonicalTreeCode(const Graph& tree,
                              std::span<const std::string> vertex_tags = {});

// Throws GraphError when either input is not a tree.
bool TreeIsomorphic(const Graph& a, const Graph& b);

}  // namespace sierpack

#endif  // SIERPACK_TREE_ISO_H_
