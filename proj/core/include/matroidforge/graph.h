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

#ifndef MATROIDFORGE_GRAPH_H_
#define MATROIDFORGE_GRAPH_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "matroidforge/binary_matroid.h"

namespace matroidforge {

struct Edge {
  std::size_t u = 0;
  std::size_t v = 0;
  std::string label;

  bool is_loop() const { return u == v; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

// Labeled multigraph; loops and parallel edges are allowed. Throws
// InvalidArgument on an out-of-range endpoint and DuplicateElements on a
// repeated edge label.
class Graph {
 public:
  Graph() = default;
  Graph(std::size_t vertex_count, std::vector<Edge> edges);

  std::size_t vertex_count() const { return vertex_count_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  std::vector<std::string> edge_labels() const;
  const Edge* find_edge(std::string_view label) const;

  // Loops count twice.
  std::size_t degree(std::size_t v) const;
  std::size_t component_count() const;
  bool is_connected() const { return component_count() <= 1; }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::size_t vertex_count_ = 0;
  std::vector<Edge> edges_;
};

// Edge labels "e0", "e1", ... in the given order.
Graph graph_from_pairs(std::size_t vertex_count,
                       const std::vector<std::pair<std::size_t, std::size_t>>&
                           pairs);

// "n=4 edges=[0-1:e0 0-2:e1 ...]".
std::string to_string(const Graph& g);

// Vertex-edge incidence matrix over GF(2); a loop is a zero column. Throws
// TooManyEdges above 64 edges.
BinaryMatroid cycle_matroid(const Graph& g);

// {"vertices": n, "edges": [[u, v, "label"], ...]}. Parsing throws ParseError
// naming `source`.
nlohmann::json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j, std::string_view source);

}  // namespace matroidforge

#endif  // MATROIDFORGE_GRAPH_H_
