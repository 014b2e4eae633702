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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "matroidforge/catalog.h"
#include "matroidforge/classify.h"
#include "matroidforge/graph_enumeration.h"
#include "test_support.h"

namespace matroidforge {
namespace {

namespace fs = std::filesystem;

TEST(Graph, Validation) {
  EXPECT_MATROID_ERROR(Graph(2, {{0, 2, "e"}}), ErrorCode::kInvalidArgument);
  EXPECT_MATROID_ERROR(Graph(2, {{0, 1, ""}}), ErrorCode::kInvalidArgument);
  EXPECT_MATROID_ERROR(Graph(2, {{0, 1, "e"}, {1, 0, "e"}}),
                       ErrorCode::kDuplicateElements);
}

TEST(Graph, DegreesAndComponents) {
  const Graph g(4, {{0, 1, "a"}, {1, 1, "l"}, {2, 3, "b"}});
  EXPECT_EQ(g.degree(1), 3u);
  EXPECT_EQ(g.component_count(), 2u);
  EXPECT_FALSE(g.is_connected());
  EXPECT_EQ(to_string(graph_from_pairs(2, {{0, 1}})), "n=2 edges=[0-1:e0]");
}

TEST(Graph, CycleMatroidMatchesGraphOracles) {
  const Graph g(4, {{0, 1, "a"}, {1, 2, "b"}, {2, 0, "c"}, {2, 3, "d"},
                    {3, 3, "l"}, {0, 1, "p"}});
  const BinaryMatroid m = cycle_matroid(g);
  EXPECT_EQ(circuits(m).label_sets(), testing::graph_cycles(g));
  EXPECT_EQ(cocircuits(m).label_sets(), testing::graph_bonds(g));
  EXPECT_TRUE(is_loop(m, "l"));
  EXPECT_TRUE(is_coloop(m, "d"));
}

TEST(Graph, TooManyEdges) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs(65, {0, 1});
  EXPECT_MATROID_ERROR(cycle_matroid(graph_from_pairs(2, pairs)),
                       ErrorCode::kTooManyEdges);
}

TEST(Graph, JsonRoundTrip) {
  const Graph g(3, {{0, 1, "x"}, {1, 2, "y"}, {2, 0, "z"}});
  EXPECT_EQ(graph_from_json(graph_to_json(g), "t"), g);
  EXPECT_MATROID_ERROR(graph_from_json(nlohmann::json::parse("{\"vertices\": 2}"), "t"),
                       ErrorCode::kParseError);
  EXPECT_MATROID_ERROR(
      graph_from_json(nlohmann::json::parse(
                          R"({"vertices": 2, "edges": [[0, "1", "a"]]})"),
                      "t"),
      ErrorCode::kParseError);
}

TEST(Enumeration, SmallCounts) {
  auto count = [](std::size_t n, std::size_t max_edges, std::size_t mult) {
    std::size_t k = 0;
    for_each_connected_graph({n, max_edges, mult}, [&](const Graph& g) {
      if (g.vertex_count() == n) ++k;
    });
    return k;
  };
  EXPECT_EQ(count(3, 3, 1), 2u);
  EXPECT_EQ(count(4, 6, 1), 6u);
}

// Connected simple graphs by vertex count: 1, 1, 2, 6, 21, 112.
TEST(Enumeration, SimpleGraphCountsMatchKnownSequence) {
  std::map<std::size_t, std::size_t> by_n;
  for_each_connected_graph({6, 15, 1},
                           [&](const Graph& g) { ++by_n[g.vertex_count()]; });
  EXPECT_EQ(by_n, (std::map<std::size_t, std::size_t>{
                      {1, 1}, {2, 1}, {3, 2}, {4, 6}, {5, 21}, {6, 112}}));
}

// Enumerates every labeled multigraph and reduces by brute-force canonical
// form, then compares with the enumerator's classes.
TEST(Enumeration, MatchesLabeledQuotient) {
  const std::size_t max_n = 5, max_m = 7, max_mult = 2;
  std::set<std::pair<std::size_t, std::vector<int>>> expected;
  for (std::size_t n = 1; n <= max_n; ++n) {
    std::vector<std::pair<std::size_t, std::size_t>> slots;
    for (std::size_t u = 0; u < n; ++u) {
      for (std::size_t v = u + 1; v < n; ++v) slots.emplace_back(u, v);
    }
    std::vector<std::size_t> mult(slots.size(), 0);
    while (true) {
      std::vector<Edge> edges;
      for (std::size_t i = 0; i < slots.size(); ++i) {
        for (std::size_t k = 0; k < mult[i]; ++k) {
          edges.push_back({slots[i].first, slots[i].second,
                           "e" + std::to_string(edges.size())});
        }
      }
      if (edges.size() <= max_m &&
          testing::graph_components(n, edges) == 1) {
        expected.emplace(n, testing::brute_canonical(n, edges));
      }
      std::size_t i = 0;
      while (i < mult.size() && mult[i] == max_mult) mult[i++] = 0;
      if (i == mult.size()) break;
      ++mult[i];
    }
  }
  std::set<std::pair<std::size_t, std::vector<int>>> got;
  std::size_t visited = 0;
  for_each_connected_graph({max_n, max_m, max_mult}, [&](const Graph& g) {
    ++visited;
    got.emplace(g.vertex_count(),
                testing::brute_canonical(g.vertex_count(), g.edges()));
  });
  EXPECT_EQ(visited, got.size()) << "duplicate isomorphism classes";
  EXPECT_EQ(got, expected);
}

TEST(Enumeration, GraphsAreConnectedOrderedAndRankIsVerticesMinusOne) {
  std::tuple<std::size_t, std::size_t, std::uint64_t> prev{0, 0, 0};
  bool first = true;
  for (const Graph& g : enumerate_connected_graphs({5, 8, 2})) {
    EXPECT_TRUE(g.is_connected());
    EXPECT_EQ(cycle_matroid(g).rank(), g.vertex_count() - 1);
    EXPECT_EQ(testing::span_rank(cycle_matroid(g).representation()),
              g.vertex_count() - 1);
    const std::tuple<std::size_t, std::size_t, std::uint64_t> key{
        g.vertex_count(), g.edge_count(), canonical_code(g)};
    if (!first) EXPECT_LT(prev, key);
    prev = key;
    first = false;
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
      EXPECT_EQ(g.edges()[i].label, "e" + std::to_string(i));
    }
  }
}

TEST(Enumeration, CanonicalCodeIgnoresVertexOrder) {
  const Graph a(4, {{0, 1, "a"}, {1, 2, "b"}, {2, 3, "c"}, {0, 1, "d"}});
  const Graph b(4, {{3, 2, "a"}, {2, 1, "b"}, {1, 0, "c"}, {2, 3, "d"}});
  const Graph c(4, {{0, 1, "a"}, {1, 2, "b"}, {2, 3, "c"}, {1, 2, "d"}});
  EXPECT_EQ(canonical_code(a), canonical_code(b));
  EXPECT_NE(canonical_code(a), canonical_code(c));
  EXPECT_MATROID_ERROR(canonical_code(Graph(2, {{1, 1, "l"}})),
                       ErrorCode::kInvalidArgument);
}

TEST(Enumeration, Caps) {
  EXPECT_MATROID_ERROR(enumerate_connected_graphs({8, 10, 1}),
                       ErrorCode::kCapExceeded);
  EXPECT_MATROID_ERROR(enumerate_connected_graphs({4, 10, 4}),
                       ErrorCode::kCapExceeded);
  EXPECT_TRUE(enumerate_connected_graphs({0, 10, 1}).empty());
}

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> c =
      load_catalog(MATROIDFORGE_TEST_CATALOG, true);
  return c;
}

TEST(Catalog, LoadsInNaturalOrder) {
  std::vector<std::string> names;
  for (const CatalogEntry& e : catalog()) names.push_back(e.name);
  const std::vector<std::string> expected = {
      "F7", "F7star", "G1",  "G2",  "G3",  "G4",  "G5",  "G6",  "G7", "G8",
      "G9", "G10",    "G11", "G12", "G13", "G14", "G15", "G16", "G17",
      "K4", "K5",     "K33"};
  EXPECT_EQ(names, expected);
}

TEST(Catalog, KnownShapes) {
  const CatalogEntry* k4 = find_entry(catalog(), "K4");
  ASSERT_TRUE(k4 && k4->graph);
  EXPECT_EQ(k4->graph->vertex_count(), 4u);
  EXPECT_EQ(k4->graph->edge_count(), 6u);

  const CatalogEntry* g10 = find_entry(catalog(), "G10");
  ASSERT_TRUE(g10 && g10->graph);
  EXPECT_EQ(g10->graph->vertex_count(), 5u);
  EXPECT_EQ(g10->graph->edge_count(), 8u);
  for (std::size_t v = 0; v < 5; ++v) EXPECT_GE(g10->graph->degree(v), 3u);

  const CatalogEntry* g17 = find_entry(catalog(), "G17");
  ASSERT_TRUE(g17 && g17->graph && g17->claimed);
  EXPECT_EQ(g17->graph->vertex_count(), 6u);
  EXPECT_EQ(g17->graph->edge_count(), 11u);
  EXPECT_EQ(g17->claimed->form, SplitForm::kContractXY);
  EXPECT_EQ(g17->claimed->target, "M(K5)");
  EXPECT_TRUE(check_claim(*g17));

  const CatalogEntry* f7 = find_entry(catalog(), "F7");
  ASSERT_NE(f7, nullptr);
  EXPECT_FALSE(f7->graph);
  EXPECT_TRUE(is_isomorphic(f7->matroid, fano_matroid()));
}

TEST(Catalog, EveryClaimHoldsAndNoSeriesPairs) {
  std::size_t claims = 0;
  for (const CatalogEntry& e : catalog()) {
    if (!e.claimed) continue;
    ++claims;
    EXPECT_TRUE(check_claim(e)) << e.name;
    EXPECT_TRUE(series_pairs(e.matroid).empty()) << e.name;
  }
  EXPECT_EQ(claims, 17u);
}

class TempDir {
 public:
  TempDir() : path_(fs::temp_directory_path() /
                    ("mf_catalog_" + std::to_string(::getpid()) + "_" +
                     std::to_string(counter_++))) {
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  const fs::path& path() const { return path_; }

 private:
  static inline int counter_ = 0;
  fs::path path_;
};

TEST(Catalog, TamperedClaimIsRejected) {
  TempDir dir;
  fs::copy(MATROIDFORGE_TEST_CATALOG, dir.path());
  std::ifstream in(dir.path() / "G11.json");
  nlohmann::json j = nlohmann::json::parse(in);
  in.close();
  j["claimed"]["target"] = "F7";
  std::ofstream(dir.path() / "G11.json") << j.dump(2);
  EXPECT_MATROID_ERROR(load_catalog(dir.path(), true),
                       ErrorCode::kTranscriptionInvalid);
  EXPECT_EQ(load_catalog(dir.path(), false).size(), catalog().size());
}

TEST(Catalog, TamperedFanoIsRejected) {
  TempDir dir;
  fs::copy(MATROIDFORGE_TEST_CATALOG, dir.path());
  std::ofstream(dir.path() / "F7.bm")
      << "3 7\na b c d e f g\n1000110\n0100101\n0010011\n";
  EXPECT_MATROID_ERROR(load_catalog(dir.path(), true),
                       ErrorCode::kTranscriptionInvalid);
}

TEST(Catalog, MissingDirectory) {
  EXPECT_MATROID_ERROR(load_catalog("/nonexistent/catalog"),
                       ErrorCode::kIoError);
}

TEST(Catalog, EnvironmentOverride) {
  TempDir dir;
  ::setenv("MATROIDFORGE_CATALOG", dir.path().c_str(), 1);
  EXPECT_EQ(default_catalog_dir(), dir.path());
  EXPECT_TRUE(load_catalog().empty());
  ::unsetenv("MATROIDFORGE_CATALOG");
  EXPECT_NE(default_catalog_dir(), dir.path());
}

}  // namespace
}  // namespace matroidforge
