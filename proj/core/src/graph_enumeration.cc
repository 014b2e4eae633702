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

#include "matroidforge/graph_enumeration.h"

#include <algorithm>
#include <array>
#include <set>

#include "matroidforge/error.h"

namespace matroidforge {
namespace {

constexpr std::size_t kN = kMaxEnumerationVertices;

// Multiplicity table of a loopless multigraph.
struct Adjacency {
  std::size_t n = 0;
  std::array<std::array<std::uint8_t, kN>, kN> mult{};
};

std::size_t pair_slot(std::size_t n, std::size_t i, std::size_t j) {
  // Offset of (i, j), i < j, in the row-major upper triangle.
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

std::uint64_t encode(const Adjacency& a, const std::array<std::size_t, kN>& p) {
  std::uint64_t code = 0;
  for (std::size_t i = 0; i < a.n; ++i) {
    for (std::size_t j = i + 1; j < a.n; ++j) {
      code = (code << 2) | a.mult[p[i]][p[j]];
    }
  }
  return code;
}

Adjacency decode(std::size_t n, std::uint64_t code) {
  Adjacency a;
  a.n = n;
  const std::size_t pairs = n * (n - 1) / 2;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const std::size_t shift = 2 * (pairs - 1 - pair_slot(n, i, j));
      a.mult[i][j] = a.mult[j][i] = (code >> shift) & 3;
    }
  }
  return a;
}

// Minimum code over vertex orders that list vertices by nondecreasing
// invariant (degree, then number of distinct neighbours); only orders
// within invariant classes need to be tried.
std::uint64_t canonical(const Adjacency& a) {
  if (a.n == 0) return 0;
  std::array<std::uint32_t, kN> key{};
  for (std::size_t v = 0; v < a.n; ++v) {
    std::uint32_t degree = 0, distinct = 0;
    for (std::size_t w = 0; w < a.n; ++w) {
      degree += a.mult[v][w];
      distinct += a.mult[v][w] != 0;
    }
    key[v] = degree * 16 + distinct;
  }
  std::array<std::size_t, kN> order{};
  for (std::size_t v = 0; v < a.n; ++v) order[v] = v;
  std::sort(order.begin(), order.begin() + a.n,
            [&](std::size_t x, std::size_t y) {
              return key[x] != key[y] ? key[x] < key[y] : x < y;
            });
  std::vector<std::pair<std::size_t, std::size_t>> classes;
  for (std::size_t i = 0; i < a.n;) {
    std::size_t j = i;
    while (j < a.n && key[order[j]] == key[order[i]]) ++j;
    classes.emplace_back(i, j);
    i = j;
  }
  std::uint64_t best = ~std::uint64_t{0};
  // Odometer over the permutations of each class.
  for (;;) {
    best = std::min(best, encode(a, order));
    std::size_t c = classes.size();
    while (c > 0) {
      --c;
      auto first = order.begin() + classes[c].first;
      auto last = order.begin() + classes[c].second;
      if (std::next_permutation(first, last)) break;
      if (c == 0) return best;
    }
  }
}

Adjacency adjacency_of(const Graph& g) {
  if (g.vertex_count() > kN) {
    throw MatroidError(ErrorCode::kCapExceeded,
                       "canonical codes support at most 7 vertices");
  }
  Adjacency a;
  a.n = g.vertex_count();
  for (const Edge& e : g.edges()) {
    if (e.is_loop()) {
      throw MatroidError(ErrorCode::kInvalidArgument,
                         "canonical codes are defined for loopless graphs");
    }
    if (a.mult[e.u][e.v] == kMaxEnumerationMultiplicity) {
      throw MatroidError(ErrorCode::kCapExceeded,
                         "edge multiplicity above 3");
    }
    ++a.mult[e.u][e.v];
    ++a.mult[e.v][e.u];
  }
  return a;
}

Graph graph_of(const Adjacency& a) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < a.n; ++i) {
    for (std::size_t j = i + 1; j < a.n; ++j) {
      for (std::uint8_t k = 0; k < a.mult[i][j]; ++k) pairs.emplace_back(i, j);
    }
  }
  return graph_from_pairs(a.n, pairs);
}

void check_caps(const EnumerationCaps& caps) {
  if (caps.max_vertices > kMaxEnumerationVertices) {
    throw MatroidError(ErrorCode::kCapExceeded,
                       "enumeration supports at most 7 vertices, got " +
                           std::to_string(caps.max_vertices));
  }
  if (caps.max_multiplicity > kMaxEnumerationMultiplicity) {
    throw MatroidError(ErrorCode::kCapExceeded,
                       "enumeration supports multiplicity at most 3, got " +
                           std::to_string(caps.max_multiplicity));
  }
}

}  // namespace

std::uint64_t canonical_code(const Graph& g) {
  return canonical(adjacency_of(g));
}

void for_each_connected_graph(const EnumerationCaps& caps,
                              const std::function<void(const Graph&)>& visit) {
  check_caps(caps);
  if (caps.max_vertices == 0) return;
  const std::size_t max_mult = std::max<std::size_t>(caps.max_multiplicity, 1);
  // level[m] holds the canonical codes of connected graphs with the current
  // vertex count and m edges. A connected graph either has an edge whose
  // removal keeps it connected or is a tree with a leaf, so every class is
  // reached from (n, m-1) by adding an edge or from (n-1, m-1) by adding a
  // pendant vertex.
  std::vector<std::set<std::uint64_t>> previous;
  for (std::size_t n = 1; n <= caps.max_vertices; ++n) {
    std::vector<std::set<std::uint64_t>> level(caps.max_edges + 1);
    if (n == 1) level[0].insert(0);
    for (std::size_t m = 1; m <= caps.max_edges; ++m) {
      for (std::uint64_t code : level[m - 1]) {
        Adjacency a = decode(n, code);
        for (std::size_t i = 0; i < n; ++i) {
          for (std::size_t j = i + 1; j < n; ++j) {
            if (a.mult[i][j] >= max_mult) continue;
            ++a.mult[i][j];
            ++a.mult[j][i];
            level[m].insert(canonical(a));
            --a.mult[i][j];
            --a.mult[j][i];
          }
        }
      }
      if (n > 1 && m - 1 < previous.size()) {
        for (std::uint64_t code : previous[m - 1]) {
          Adjacency a = decode(n - 1, code);
          a.n = n;
          for (std::size_t v = 0; v + 1 < n; ++v) {
            a.mult[v][n - 1] = a.mult[n - 1][v] = 1;
            level[m].insert(canonical(a));
            a.mult[v][n - 1] = a.mult[n - 1][v] = 0;
          }
        }
      }
    }
    for (const auto& codes : level) {
      for (std::uint64_t code : codes) visit(graph_of(decode(n, code)));
    }
    previous = std::move(level);
  }
}

std::vector<Graph> enumerate_connected_graphs(const EnumerationCaps& caps) {
  std::vector<Graph> out;
  for_each_connected_graph(caps, [&](const Graph& g) { out.push_back(g); });
  return out;
}

}  // namespace matroidforge
