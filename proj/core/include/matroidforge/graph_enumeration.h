// Copyright 2026 The Authors.
//
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

#ifndef MATROIDFORGE_GRAPH_ENUMERATION_H_
#define MATROIDFORGE_GRAPH_ENUMERATION_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "matroidforge/graph.h"

namespace matroidforge {

struct EnumerationCaps {
  std::size_t max_vertices = 0;
  std::size_t max_edges = 0;
  std::size_t max_multiplicity = 1;
};

inline constexpr std::size_t kMaxEnumerationVertices = 7;
inline constexpr std::size_t kMaxEnumerationMultiplicity = 3;

// Canonical code of a loopless multigraph on at most 7 vertices: the
// minimum, over vertex orders, of the edge multiplicities of the pairs
// (0,1), (0,2), ..., (n-2,n-1) packed two bits each. Equal codes for equal
// vertex counts means isomorphic. Throws CapExceeded beyond 7 vertices or
// multiplicity 3, InvalidArgument on a loop.
std::uint64_t canonical_code(const Graph& g);

// Visits one representative of every isomorphism class of connected
// loopless multigraphs with 1..max_vertices vertices, at most max_edges
// edges and at most max_multiplicity parallel copies of any edge. Order is
// by vertex count, then edge count, then canonical code; edges are
// labeled e0, e1, ... Throws CapExceeded when max_vertices > 7 or
// max_multiplicity > 3.
void for_each_connected_graph(const EnumerationCaps& caps,
                              const std::function<void(const Graph&)>& visit);
std::vector<Graph> enumerate_connected_graphs(const EnumerationCaps& caps);

}  // namespace matroidforge

#endif  // MATROIDFORGE_GRAPH_ENUMERATION_H_
