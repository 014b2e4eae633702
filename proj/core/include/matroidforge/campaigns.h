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

#ifndef MATROIDFORGE_CAMPAIGNS_H_
#define MATROIDFORGE_CAMPAIGNS_H_

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "matroidforge/catalog.h"
#include "matroidforge/graph.h"
#include "matroidforge/graph_enumeration.h"
#include "matroidforge/report.h"

namespace matroidforge {

// Receives human-readable progress lines; may be called from worker
// threads, one call at a time.
using ProgressFn = std::function<void(const std::string&)>;

// Connected graphs on at most max_vertices vertices that are either simple
// or have multiplicity at most 2 and at most 8 edges; one per isomorphism
// class, ordered by vertex count, edge count and canonical code.
std::vector<Graph> lemma_corpus(std::size_t max_vertices);

struct LemmaCampaignOptions {
  std::size_t max_vertices = 5;
  std::size_t jobs = 1;
  // Flips one bit of every element-split matrix before checking; the report
  // must then contain failures.
  bool inject_mutant = false;
  ProgressFn progress;
};

// Checks, for every corpus graph and ordered pair of distinct edges, the
// element-splitting identities (deletion and contraction of the new
// element, rank, cocircuits, the delete/contract exchange, graphicness for
// adjacent edges, non-Eulerian), the set-theoretic circuit construction, and
// the structural consequences of minimality and of splitting minors.
VerificationReport verify_lemmas(const LemmaCampaignOptions& options);

// For every catalog entry with a claim: the claim holds, verify_minimal
// finds the claimed form first, there is no series pair, and M(K4) is a
// witnessed minor (or the entry is M(K4)). Also checks every catalog graph
// is graphic and the minimality consequences on the catalog.
VerificationReport verify_minimal_catalog(
    const std::vector<CatalogEntry>& catalog, ProgressFn progress = {});

struct TheoremCampaignOptions {
  EnumerationCaps caps{6, 10, 2};
  std::size_t jobs = 1;
  ProgressFn progress;
};

inline constexpr std::size_t kTheoremMaxVertices = 7;
inline constexpr std::size_t kTheoremMaxEdges = 12;

// For every enumerated connected graph G checks that every element
// splitting of M(G) is cographic exactly when M(G) has no M(K4) minor.
// Throws CapExceeded beyond 7 vertices or 12 edges. The report does not
// depend on `jobs`.
VerificationReport verify_main_theorem(const TheoremCampaignOptions& options);

// Both sides of the theorem's equivalence for one graph. The pair scan
// stops at the first non-cographic splitting.
struct TheoremCase {
  BinaryMatroid matroid;
  std::optional<MinorWitness> k4_witness;
  std::optional<std::pair<std::string, std::string>> failing_pair;
  std::string offending;  // excluded minor of the failing splitting
  std::optional<MinorWitness> offending_witness;

  bool all_splittings_cographic() const { return !failing_pair; }
  bool has_k4_minor() const { return k4_witness.has_value(); }
};
TheoremCase evaluate_theorem_case(const Graph& g);

}  // namespace matroidforge

#endif  // MATROIDFORGE_CAMPAIGNS_H_
