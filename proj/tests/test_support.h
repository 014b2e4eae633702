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

// Brute-force oracles and generators shared by the unit tests. Nothing here
// calls the library's rank, kernel or circuit code, so the oracles stay
// independent of what they check.

#ifndef MATROIDFORGE_TESTS_TEST_SUPPORT_H_
#define MATROIDFORGE_TESTS_TEST_SUPPORT_H_

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <gtest/gtest.h>

#include "matroidforge/binary_matroid.h"
#include "matroidforge/error.h"
#include "matroidforge/gf2_matrix.h"
#include "matroidforge/graph.h"

// Expects `stmt` to throw MatroidError with the given code.
#define EXPECT_MATROID_ERROR(stmt, error_code)                         \
  do {                                                                \
    try {                                                             \
      stmt;                                                           \
      ADD_FAILURE() << #stmt " did not throw";                        \
    } catch (const ::matroidforge::MatroidError& e) {                 \
      EXPECT_EQ(e.code(), error_code) << e.what();                    \
    }                                                                 \
  } while (0)

namespace matroidforge::testing {

inline GF2Matrix random_matrix(std::mt19937_64& rng, std::size_t rows,
                               std::size_t cols, double density = 0.5) {
  std::bernoulli_distribution coin(density);
  std::vector<Word> r(rows, 0);
  for (auto& row : r) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (coin(rng)) row |= Word{1} << c;
    }
  }
  return GF2Matrix::from_rows(cols, std::move(r));
}

inline std::vector<std::string> numbered_labels(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back("e" + std::to_string(i));
  return out;
}

inline BinaryMatroid random_matroid(std::mt19937_64& rng, std::size_t rows,
                                    std::size_t cols, double density = 0.5) {
  return BinaryMatroid(numbered_labels(cols),
                       random_matrix(rng, rows, cols, density));
}

// Rank as log2 of the number of distinct vectors in the row span.
inline std::size_t span_rank(const std::vector<Word>& rows) {
  std::set<Word> span{0};
  for (Word r : rows) {
    std::set<Word> next = span;
    for (Word v : span) next.insert(v ^ r);
    span = std::move(next);
  }
  std::size_t k = 0;
  while ((std::size_t{1} << k) < span.size()) ++k;
  return k;
}

inline std::size_t span_rank(const GF2Matrix& m) {
  return span_rank(std::vector<Word>(m.row_words().begin(),
                                     m.row_words().end()));
}

// Column i of the matrix as a word over its rows.
inline std::vector<Word> columns_of(const GF2Matrix& m) {
  std::vector<Word> cols(m.cols(), 0);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (m.at(r, c)) cols[c] |= Word{1} << r;
    }
  }
  return cols;
}

// Minimal nonempty column sets summing to zero, by scanning all 2^n subsets.
inline std::set<ElementMask> brute_circuits(const GF2Matrix& m) {
  const std::vector<Word> cols = columns_of(m);
  const std::size_t n = cols.size();
  std::vector<Word> sum(std::size_t{1} << n, 0);
  std::vector<ElementMask> zero;
  for (ElementMask s = 1; s < (ElementMask{1} << n); ++s) {
    const int low = __builtin_ctzll(s);
    sum[s] = sum[s & (s - 1)] ^ cols[low];
    if (sum[s] == 0) zero.push_back(s);
  }
  std::set<ElementMask> out;
  for (ElementMask s : zero) {
    bool minimal = true;
    for (ElementMask t : zero) {
      if (t != s && (t & s) == t) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.insert(s);
  }
  return out;
}

inline std::set<LabelSet> to_label_sets(const std::vector<std::string>& labels,
                                        const std::set<ElementMask>& masks) {
  std::set<LabelSet> out;
  for (ElementMask m : masks) {
    LabelSet s;
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if (m >> i & 1) s.insert(labels[i]);
    }
    out.insert(std::move(s));
  }
  return out;
}

inline std::size_t graph_components(std::size_t n,
                                    const std::vector<Edge>& edges,
                                    ElementMask removed = 0) {
  std::vector<std::size_t> comp(n);
  for (std::size_t v = 0; v < n; ++v) comp[v] = v;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (removed >> i & 1) continue;
      const std::size_t lo = std::min(comp[edges[i].u], comp[edges[i].v]);
      for (std::size_t v : {edges[i].u, edges[i].v}) {
        if (comp[v] != lo) {
          const std::size_t old = comp[v];
          for (auto& c : comp) {
            if (c == old) c = lo;
          }
          changed = true;
        }
      }
    }
  }
  return std::set<std::size_t>(comp.begin(), comp.end()).size();
}

// Edge sets of cycles: every touched vertex has degree two and the edges
// form one connected piece (a loop is a cycle by itself).
inline std::set<LabelSet> graph_cycles(const Graph& g) {
  const auto& e = g.edges();
  std::set<ElementMask> out;
  for (ElementMask s = 1; s < (ElementMask{1} << e.size()); ++s) {
    std::map<std::size_t, int> degree;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (s >> i & 1) {
        ++degree[e[i].u];
        ++degree[e[i].v];
      }
    }
    bool two_regular = true;
    for (const auto& [v, d] : degree) two_regular = two_regular && d == 2;
    if (!two_regular) continue;
    // Connected on touched vertices: removing all edges outside s leaves
    // (untouched vertices) + 1 components.
    ElementMask outside = ~s & ((ElementMask{1} << e.size()) - 1);
    if (graph_components(g.vertex_count(), e, outside) ==
        g.vertex_count() - degree.size() + 1) {
      out.insert(s);
    }
  }
  return to_label_sets(g.edge_labels(), out);
}

// Minimal edge sets whose removal increases the number of components.
inline std::set<LabelSet> graph_bonds(const Graph& g) {
  const auto& e = g.edges();
  const std::size_t base = graph_components(g.vertex_count(), e);
  std::vector<ElementMask> cuts;
  for (ElementMask s = 1; s < (ElementMask{1} << e.size()); ++s) {
    if (graph_components(g.vertex_count(), e, s) > base) cuts.push_back(s);
  }
  std::set<ElementMask> out;
  for (ElementMask s : cuts) {
    bool minimal = true;
    for (ElementMask t : cuts) {
      if (t != s && (t & s) == t) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.insert(s);
  }
  return to_label_sets(g.edge_labels(), out);
}

// Graph with edge `label` contracted: its endpoints merge, other edges
// between them become loops.
inline Graph contract_edge(const Graph& g, const std::string& label) {
  const Edge* c = g.find_edge(label);
  std::vector<Edge> edges;
  auto relabel = [&](std::size_t v) {
    std::size_t w = v == c->v ? c->u : v;
    return w > c->v ? w - 1 : w;
  };
  for (const Edge& e : g.edges()) {
    if (e.label == label) continue;
    edges.push_back({relabel(e.u), relabel(e.v), e.label});
  }
  return Graph(g.vertex_count() - 1, std::move(edges));
}

// A graph has no K4 minor exactly when repeatedly deleting vertices with at
// most two neighbours (joining the two neighbours) empties it.
inline bool has_k4_graph_minor(const Graph& g) {
  std::vector<std::set<std::size_t>> adj(g.vertex_count());
  for (const Edge& e : g.edges()) {
    if (e.is_loop()) continue;
    adj[e.u].insert(e.v);
    adj[e.v].insert(e.u);
  }
  std::set<std::size_t> alive;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) alive.insert(v);
  bool progress = true;
  while (progress && !alive.empty()) {
    progress = false;
    for (std::size_t v : alive) {
      if (adj[v].size() > 2) continue;
      std::vector<std::size_t> nb(adj[v].begin(), adj[v].end());
      for (std::size_t w : nb) adj[w].erase(v);
      if (nb.size() == 2) {
        adj[nb[0]].insert(nb[1]);
        adj[nb[1]].insert(nb[0]);
      }
      adj[v].clear();
      alive.erase(v);
      progress = true;
      break;
    }
  }
  return !alive.empty();
}

// Minimum adjacency-multiplicity code over all vertex permutations.
inline std::vector<int> brute_canonical(std::size_t n,
                                        const std::vector<Edge>& edges) {
  std::vector<std::vector<int>> mult(n, std::vector<int>(n, 0));
  for (const Edge& e : edges) {
    ++mult[e.u][e.v];
    ++mult[e.v][e.u];
  }
  std::vector<std::size_t> p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = i;
  std::vector<int> best;
  do {
    std::vector<int> code;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) code.push_back(mult[p[i]][p[j]]);
    }
    if (best.empty() || code < best) best = code;
  } while (std::next_permutation(p.begin(), p.end()));
  return best;
}

}  // namespace matroidforge::testing

#endif  // MATROIDFORGE_TESTS_TEST_SUPPORT_H_
