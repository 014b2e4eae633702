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

#include "matroidforge/graph.h"

#include <numeric>
#include <set>

#include "matroidforge/error.h"

namespace matroidforge {

Graph::Graph(std::size_t vertex_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
  std::set<std::string_view> seen;
  for (const Edge& e : edges_) {
    if (e.u >= vertex_count_ || e.v >= vertex_count_) {
      throw MatroidError(ErrorCode::kInvalidArgument,
                         "edge '" + e.label + "' has an endpoint outside 0.." +
                             std::to_string(vertex_count_));
    }
    if (e.label.empty()) {
      throw MatroidError(ErrorCode::kInvalidArgument, "empty edge label");
    }
    if (!seen.insert(e.label).second) {
      throw MatroidError(ErrorCode::kDuplicateElements,
                         "duplicate edge label '" + e.label + "'");
    }
  }
}

std::vector<std::string> Graph::edge_labels() const {
  std::vector<std::string> out;
  out.reserve(edges_.size());
  for (const Edge& e : edges_) out.push_back(e.label);
  return out;
}

const Edge* Graph::find_edge(std::string_view label) const {
  for (const Edge& e : edges_) {
    if (e.label == label) return &e;
  }
  return nullptr;
}

std::size_t Graph::degree(std::size_t v) const {
  std::size_t d = 0;
  for (const Edge& e : edges_) d += (e.u == v) + (e.v == v);
  return d;
}

std::size_t Graph::component_count() const {
  std::vector<std::size_t> parent(vertex_count_);
  std::iota(parent.begin(), parent.end(), 0);
  auto root = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  std::size_t components = vertex_count_;
  for (const Edge& e : edges_) {
    std::size_t a = root(e.u), b = root(e.v);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components;
}

Graph graph_from_pairs(
    std::size_t vertex_count,
    const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    edges.push_back({pairs[i].first, pairs[i].second, "e" + std::to_string(i)});
  }
  return Graph(vertex_count, std::move(edges));
}

std::string to_string(const Graph& g) {
  std::string s = "n=" + std::to_string(g.vertex_count()) + " edges=[";
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    const Edge& e = g.edges()[i];
    if (i) s += ' ';
    s += std::to_string(e.u) + '-' + std::to_string(e.v) + ':' + e.label;
  }
  return s + ']';
}

BinaryMatroid cycle_matroid(const Graph& g) {
  if (g.edge_count() > kMaxElements) {
    throw MatroidError(ErrorCode::kTooManyEdges,
                       std::to_string(g.edge_count()) +
                           " edges; cycle matroids are limited to 64");
  }
  std::vector<Word> rows(g.vertex_count(), 0);
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const Edge& e = g.edges()[i];
    if (e.is_loop()) continue;
    rows[e.u] |= bit(i);
    rows[e.v] |= bit(i);
  }
  return BinaryMatroid(g.edge_labels(),
                       GF2Matrix::from_rows(g.edge_count(), std::move(rows)));
}

nlohmann::json graph_to_json(const Graph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v, e.label});
  return {{"vertices", g.vertex_count()}, {"edges", std::move(edges)}};
}

Graph graph_from_json(const nlohmann::json& j, std::string_view source) {
  auto fail = [&](const std::string& what) -> MatroidError {
    return MatroidError(ErrorCode::kParseError,
                        std::string(source) + ": " + what);
  };
  if (!j.is_object()) throw fail("expected a JSON object");
  if (!j.contains("vertices") || !j["vertices"].is_number_unsigned()) {
    throw fail("'vertices' must be a nonnegative integer");
  }
  if (!j.contains("edges") || !j["edges"].is_array()) {
    throw fail("'edges' must be an array");
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < j["edges"].size(); ++i) {
    const auto& e = j["edges"][i];
    if (!e.is_array() || e.size() != 3 || !e[0].is_number_unsigned() ||
        !e[1].is_number_unsigned() || !e[2].is_string()) {
      throw fail("edge " + std::to_string(i) +
                 " must be [u, v, \"label\"] with u, v nonnegative");
    }
    edges.push_back({e[0].get<std::size_t>(), e[1].get<std::size_t>(),
                     e[2].get<std::string>()});
  }
  try {
    return Graph(j["vertices"].get<std::size_t>(), std::move(edges));
  } catch (const MatroidError& e) {
    throw fail(e.what());
  }
}

}  // namespace matroidforge
