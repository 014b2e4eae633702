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

#include "matroidforge/campaigns.h"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <set>
#include <thread>
#include <tuple>

#include "matroidforge/classify.h"
#include "matroidforge/error.h"
#include "matroidforge/minors.h"
#include "matroidforge/splitting.h"

namespace matroidforge {
namespace {

std::string braces(const LabelSet& s) {
  std::string out = "{";
  for (const std::string& l : s) {
    if (out.size() > 1) out += ',';
    out += l;
  }
  return out + "}";
}

std::string describe(const MinorWitness& w) {
  std::string out = "delete " + braces(w.deleted) + " contract " +
                    braces(w.contracted) + " map {";
  bool first = true;
  for (const auto& [from, to] : w.bijection) {
    if (!first) out += ',';
    first = false;
    out += from + "->" + to;
  }
  return out + "}";
}

nlohmann::json witness_json(const MinorWitness& w) {
  return {{"deleted", w.deleted},
          {"contracted", w.contracted},
          {"bijection", w.bijection}};
}

bool identical(const BinaryMatroid& a, const BinaryMatroid& b) {
  return a.labels() == b.labels() && a.representation() == b.representation();
}

BinaryMatroid relabel(const BinaryMatroid& m, const std::string& from,
                      const std::string& to) {
  std::vector<std::string> labels = m.labels();
  std::replace(labels.begin(), labels.end(), from, to);
  return BinaryMatroid(std::move(labels), m.representation());
}

std::string pair_id(const std::string& base, const std::string& x,
                    const std::string& y) {
  return base + " x=" + x + " y=" + y;
}

// Runs `per_item(i)` for i in [0, count) on `jobs` threads and merges the
// resulting reports in index order.
template <typename PerItem>
VerificationReport run_parallel(VerificationReport merged, std::size_t count,
                                std::size_t jobs, const ProgressFn& progress,
                                const std::string& what, PerItem per_item) {
  std::vector<VerificationReport> results(count);
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> done{0};
  std::mutex progress_mutex;
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        results[i] = per_item(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        next = count;
        return;
      }
      const std::size_t d = done.fetch_add(1) + 1;
      if (progress && (d % 100 == 0 || d == count)) {
        std::lock_guard lock(progress_mutex);
        progress(what + " " + std::to_string(d) + "/" + std::to_string(count));
      }
    }
  };
  const std::size_t threads = std::clamp<std::size_t>(jobs, 1, 256);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }
  if (error) std::rethrow_exception(error);
  for (const VerificationReport& r : results) merged.merge(r);
  return merged;
}

// Consequences of minimality for a graphic matroid m and one piece of
// evidence (x, y, form) against target f.
void check_minimal_consequences(VerificationReport& report,
                                const std::string& input,
                                const BinaryMatroid& m, const std::string& f,
                                const MinimalEvidence& ev) {
  const ElementMask pair = bit(m.index_of(ev.x)) | bit(m.index_of(ev.y));
  const auto parallel = parallel_pairs(m);
  const std::vector<ElementMask> cs = circuit_masks(m);
  const bool simple = loops_mask(m) == 0 && parallel.empty();
  const std::string id = pair_id(input, ev.x, ev.y) + " form " +
                         std::string(form_notation(ev.form)) + " -> " + f;
  auto circuit_through_pair = [&](auto size_ok) {
    return std::any_of(cs.begin(), cs.end(), [&](ElementMask c) {
      return is_subset(pair, c) && size_ok(popcount(c));
    });
  };

  report.check(id, "minimal-has-no-loops-or-coloops",
               loops_mask(m) == 0 && coloops_mask(m) == 0,
               [] { return "loop or coloop present"; });
  report.check(id, "minimal-parallel-pairs-meet-pair",
               std::all_of(parallel.begin(), parallel.end(),
                           [&](const auto& p) {
                             return p.first == ev.x || p.first == ev.y ||
                                    p.second == ev.x || p.second == ev.y;
                           }),
               [] { return "a parallel pair avoids x and y"; });
  report.check(id, "minimal-pair-not-parallel",
               std::none_of(cs.begin(), cs.end(),
                            [&](ElementMask c) { return c == pair; }),
               [] { return "x and y are parallel"; });

  const bool cographic_target = f == "F7*" || f == "M(K3,3)";
  const bool graphic_target = f == "F7" || f == "M(K5)";
  if (ev.form == SplitForm::kWhole && cographic_target) {
    report.check(id, "minimal-whole-form-host-is-simple", simple,
                 [] { return "host is not simple"; });
    report.check(id, "minimal-whole-form-no-odd-circuit-through-pair",
                 !circuit_through_pair([](int k) { return k % 2 == 1; }),
                 [] { return "an odd circuit contains x and y"; });
    const bool even_splits_pair =
        std::any_of(cs.begin(), cs.end(), [&](ElementMask c) {
          return popcount(c) % 2 == 0 && popcount(c & pair) == 1;
        });
    report.check(id, "minimal-whole-form-no-even-circuit-splits-pair",
                 !even_splits_pair,
                 [] { return "an even circuit contains exactly one of x, y"; });
  }
  if (ev.form == SplitForm::kContractX && cographic_target) {
    report.check(
        id, "minimal-contract-x-cographic-target-simple-no-triangle-on-pair",
        simple && !circuit_through_pair([](int k) { return k == 3; }),
        [&] {
          return simple ? "a 3-circuit contains x and y" : "host not simple";
        });
  }
  if (ev.form == SplitForm::kContractX && graphic_target) {
    report.check(
        id, "minimal-contract-x-graphic-target-one-parallel-pair-no-triangle",
        parallel.size() == 1 &&
            !circuit_through_pair([](int k) { return k == 3; }),
        [&] {
          return std::to_string(parallel.size()) +
                 " parallel pairs; triangle on pair: " +
                 (circuit_through_pair([](int k) { return k == 3; }) ? "yes"
                                                                     : "no");
        });
  }
  if (ev.form == SplitForm::kContractXY) {
    report.check(id, "minimal-contract-pair-simple-no-short-circuit-on-pair",
                 simple && !circuit_through_pair(
                               [](int k) { return k == 3 || k == 4; }),
                 [&] {
                   return simple ? "a 3- or 4-circuit contains x and y"
                                 : "host not simple";
                 });
  }
  const BinaryMatroid whole = apply_form(m, ev.x, ev.y, SplitForm::kWhole);
  const auto& fc = ForbiddenCatalog::instance();
  bool whole_is_f7_or_k5 = false;
  for (const MinorPattern* p : {&fc.f7(), &fc.k5()}) {
    if (whole.size() == p->matroid().size() &&
        whole.rank() == p->matroid().rank() &&
        is_isomorphic(whole, p->matroid())) {
      whole_is_f7_or_k5 = true;
    }
  }
  report.check(id, "minimal-whole-split-not-f7-or-k5", !whole_is_f7_or_k5,
               [] { return "M'_{x,y} is isomorphic to F7 or M(K5)"; });
}

void declare_minimal_consequences(VerificationReport& report) {
  for (const char* id :
       {"minimal-has-no-loops-or-coloops", "minimal-parallel-pairs-meet-pair",
        "minimal-pair-not-parallel", "minimal-whole-form-host-is-simple",
        "minimal-whole-form-no-odd-circuit-through-pair",
        "minimal-whole-form-no-even-circuit-splits-pair",
        "minimal-contract-x-cographic-target-simple-no-triangle-on-pair",
        "minimal-contract-x-graphic-target-one-parallel-pair-no-triangle",
        "minimal-contract-pair-simple-no-short-circuit-on-pair",
        "minimal-whole-split-not-f7-or-k5"}) {
    report.declare(id);
  }
}

// Minimality consequences for every (pair, form, target) evidence of m.
void check_minimality(VerificationReport& report, const std::string& input,
                      const BinaryMatroid& m) {
  if (!series_pairs(m).empty()) return;
  for (const MinorPattern* f : ForbiddenCatalog::instance().splitting_targets()) {
    for (const MinimalEvidence& ev : all_minimal_evidence(m, f->matroid())) {
      report.count_detail("minimal_evidence");
      check_minimal_consequences(report, input, m, f->name(), ev);
    }
  }
}

// Consequences of M_{x,y}/{x} or M_{x,y}/{x,y} being isomorphic to a member
// of the splitting targets, for every ordered pair.
void check_splitting_minors(VerificationReport& report,
                            const std::string& input, const BinaryMatroid& m) {
  const auto& labels = m.labels();
  const auto parallel = parallel_pairs(m);
  std::optional<std::vector<ElementMask>> cs, cocs;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    for (std::size_t j = 0; j < labels.size(); ++j) {
      if (i == j) continue;
      const std::string& x = labels[i];
      const std::string& y = labels[j];
      const BinaryMatroid s = split(m, x, y);
      const BinaryMatroid by_x = contract(s, {x});
      const BinaryMatroid by_xy = contract(s, {x, y});
      for (const MinorPattern* f :
           ForbiddenCatalog::instance().splitting_targets()) {
        const BinaryMatroid& fm = f->matroid();
        for (const BinaryMatroid* minor : {&by_x, &by_xy}) {
          if (minor->size() != fm.size() || minor->rank() != fm.rank() ||
              !is_isomorphic(*minor, fm)) {
            continue;
          }
          const bool pair_form = minor == &by_xy;
          const std::string id = pair_id(input, x, y) + " split/" +
                                 (pair_form ? "{x,y}" : "{x}") + " -> " +
                                 f->name();
          report.count_detail("splitting_minor_matches");
          report.check(id, "splitting-minor-host-has-no-loops-or-coloops",
                       loops_mask(m) == 0 && coloops_mask(m) == 0,
                       [] { return "loop or coloop present"; });
          const ElementMask pair = bit(i) | bit(j);
          report.check(id, "splitting-minor-pair-not-parallel",
                       !(m.column(i) == m.column(j) && m.column(i) != 0),
                       [] { return "x and y are parallel"; });
          report.check(id, "splitting-minor-parallel-pairs-meet-pair",
                       std::all_of(parallel.begin(), parallel.end(),
                                   [&](const auto& p) {
                                     return p.first == x || p.first == y ||
                                            p.second == x || p.second == y;
                                   }),
                       [] { return "a parallel pair avoids x and y"; });
          if (pair_form) {
            report.check(id, "pair-contraction-host-has-at-most-one-parallel-pair",
                         parallel.size() <= 1, [&] {
                           return std::to_string(parallel.size()) +
                                  " parallel pairs";
                         });
          }
          auto odd_members_meet_pair = [&](const std::vector<ElementMask>& fam) {
            return std::all_of(fam.begin(), fam.end(), [&](ElementMask c) {
              return popcount(c) % 2 == 0 || (c & pair) != 0;
            });
          };
          if (f->name() == "M(K3,3)") {
            if (!cs) cs = circuit_masks(m);
            report.check(id, "k33-splitting-minor-odd-circuits-meet-pair",
                         odd_members_meet_pair(*cs),
                         [] { return "an odd circuit avoids x and y"; });
          }
          if (f->name() == "M(K5)") {
            if (!cocs) cocs = circuit_masks(dual(m));
            report.check(id, "k5-splitting-minor-odd-cocircuits-meet-pair",
                         odd_members_meet_pair(*cocs),
                         [] { return "an odd cocircuit avoids x and y"; });
          }
        }
      }
    }
  }
}

void declare_splitting_minor_checks(VerificationReport& report) {
  for (const char* id : {"splitting-minor-host-has-no-loops-or-coloops",
                         "splitting-minor-pair-not-parallel",
                         "splitting-minor-parallel-pairs-meet-pair",
                         "pair-contraction-host-has-at-most-one-parallel-pair",
                         "k33-splitting-minor-odd-circuits-meet-pair",
                         "k5-splitting-minor-odd-cocircuits-meet-pair"}) {
    report.declare(id);
  }
}

constexpr const char* kLemmaProperties[] = {
    "split-equals-element-split-minus-new-element",
    "contracting-new-element-restores-matroid",
    "element-split-raises-rank-by-one",
    "cocircuits-survive-element-split",
    "cocircuit-pair-makes-new-element-and-pair-cocircuits",
    "cocircuit-free-pair-makes-triple-cocircuit",
    "delete-x-contract-y-matches-delete-x",
    "adjacent-pair-split-stays-graphic",
    "element-split-is-not-eulerian",
    "element-split-circuits-match-set-construction",
};

BinaryMatroid flip_one_bit(const BinaryMatroid& m, std::size_t column) {
  return BinaryMatroid(m.labels(),
                       m.representation().with_bit(
                           0, column, !m.representation().at(0, column)));
}

VerificationReport check_graph_pairs(const Graph& g, const std::string& input,
                                     bool inject_mutant) {
  VerificationReport report;
  const BinaryMatroid m = cycle_matroid(g);
  const std::string a = default_new_label(m);
  const CircuitFamily m_circuits = circuits(m);
  const CircuitFamily m_cocircuits = cocircuits(m);
  const auto& labels = m.labels();

  const EulerianReport eul = eulerian_report(m);
  if (eul.union_of_circuits != eul.disjoint_partition) {
    report.count_detail("eulerian_readings_disagree_on_corpus");
  }

  for (std::size_t i = 0; i < labels.size(); ++i) {
    for (std::size_t j = 0; j < labels.size(); ++j) {
      if (i == j) continue;
      const std::string& x = labels[i];
      const std::string& y = labels[j];
      const std::string id = pair_id(input, x, y);
      const LabelSet pair{x, y};
      BinaryMatroid ms = element_split(m, pair, a);
      if (inject_mutant) ms = flip_one_bit(ms, i);

      report.check(id, kLemmaProperties[0],
                   identical(split(m, x, y), delete_elements(ms, {a})),
                   [] { return "representations differ"; });
      report.check(id, kLemmaProperties[1],
                   same_matroid(contract(ms, {a}), m),
                   [] { return "circuits differ"; });
      report.check(id, kLemmaProperties[2], ms.rank() == m.rank() + 1, [&] {
        return "rank " + std::to_string(m.rank()) + " -> " +
               std::to_string(ms.rank());
      });

      const CircuitFamily ms_cocircuits = cocircuits(ms);
      bool all_survive = true;
      for (const LabelSet& c : m_cocircuits.label_sets()) {
        all_survive = all_survive && ms_cocircuits.contains(c);
      }
      report.check(id, kLemmaProperties[3], all_survive,
                   [] { return "a cocircuit of M is not one of M'"; });

      if (m_cocircuits.contains(pair)) {
        report.check(id, kLemmaProperties[4],
                     ms_cocircuits.contains(LabelSet{a}) &&
                         ms_cocircuits.contains(pair),
                     [] { return "{a} or {x,y} is not a cocircuit of M'"; });
      }
      if (!m_cocircuits.contains(LabelSet{x}) &&
          !m_cocircuits.contains(LabelSet{y}) && !m_cocircuits.contains(pair)) {
        report.check(id, kLemmaProperties[5],
                     ms_cocircuits.contains(LabelSet{x, y, a}),
                     [] { return "{x,y,a} is not a cocircuit of M'"; });
      }

      const BinaryMatroid exchanged =
          relabel(contract(delete_elements(ms, {x}), {y}), a, y);
      report.check(id, kLemmaProperties[6],
                   same_matroid(exchanged, delete_elements(m, {x})),
                   [] { return "circuits differ with a renamed to y"; });

      const Edge& ex = g.edges()[i];
      const Edge& ey = g.edges()[j];
      if (ex.u == ey.u || ex.u == ey.v || ex.v == ey.u || ex.v == ey.v) {
        const Classification c = is_graphic(ms);
        report.check(id, kLemmaProperties[7], c.holds, [&] {
          return c.offending + " minor: " + describe(*c.witness);
        });
      }

      const EulerianReport split_eul = eulerian_report(ms);
      report.check(id, kLemmaProperties[8], !split_eul.disjoint_partition,
                   [] { return "E(M') is a disjoint union of circuits"; });
      if (split_eul.union_of_circuits) {
        report.count_detail("element_split_union_of_circuits_reading_true");
      }

      const CircuitFamily expected =
          element_split_circuits_oracle(m_circuits, pair, a);
      const CircuitFamily actual = circuits(ms);
      report.check(id, kLemmaProperties[9], expected == actual, [&] {
        return std::to_string(expected.size()) + " constructed vs " +
               std::to_string(actual.size()) + " enumerated circuits";
      });
    }
  }
  check_minimality(report, input, m);
  check_splitting_minors(report, input, m);
  return report;
}

std::string graph_id(std::size_t index, const Graph& g) {
  return "g" + std::to_string(index) + " " + to_string(g);
}

}  // namespace

std::vector<Graph> lemma_corpus(std::size_t max_vertices) {
  std::set<std::tuple<std::size_t, std::size_t, std::uint64_t>> keys;
  auto add = [&](const Graph& g) {
    keys.emplace(g.vertex_count(), g.edge_count(), canonical_code(g));
  };
  const std::size_t simple_edges = max_vertices * (max_vertices - 1) / 2;
  if (max_vertices == 0) return {};
  for_each_connected_graph({max_vertices, simple_edges, 1}, add);
  for_each_connected_graph({max_vertices, 8, 2}, add);
  std::vector<Graph> out;
  out.reserve(keys.size());
  // Graphs are rebuilt from the canonical code so edge order is canonical.
  std::vector<Graph> all = enumerate_connected_graphs(
      {max_vertices, std::max<std::size_t>(simple_edges, 8), 2});
  for (const Graph& g : all) {
    if (keys.count({g.vertex_count(), g.edge_count(), canonical_code(g)})) {
      out.push_back(g);
    }
  }
  return out;
}

VerificationReport verify_lemmas(const LemmaCampaignOptions& options) {
  const std::vector<Graph> corpus = lemma_corpus(options.max_vertices);
  VerificationReport report(
      "verify-lemmas",
      {{"max_vertices", options.max_vertices},
       {"simple_max_edges",
        options.max_vertices * (options.max_vertices ? options.max_vertices - 1 : 0) / 2},
       {"multigraph_max_multiplicity", 2},
       {"multigraph_max_edges", 8},
       {"pairs", "ordered"},
       {"mutant", options.inject_mutant}});
  for (const char* id : kLemmaProperties) report.declare(id);
  declare_minimal_consequences(report);
  declare_splitting_minor_checks(report);
  report.details()["graphs"] = corpus.size();
  return run_parallel(
      std::move(report), corpus.size(), options.jobs, options.progress,
      "verify-lemmas graphs", [&](std::size_t i) {
        return check_graph_pairs(corpus[i], graph_id(i, corpus[i]),
                                 options.inject_mutant);
      });
}

VerificationReport verify_minimal_catalog(
    const std::vector<CatalogEntry>& catalog, ProgressFn progress) {
  VerificationReport report("verify-minimal",
                            {{"entries", catalog.size()}});
  for (const char* id :
       {"claimed-form-holds", "verify-minimal-finds-claimed-form",
        "no-series-pair", "has-k4-minor", "catalog-graph-is-graphic"}) {
    report.declare(id);
  }
  declare_minimal_consequences(report);
  declare_splitting_minor_checks(report);
  const auto& fc = ForbiddenCatalog::instance();
  const CatalogEntry* g5 = find_entry(catalog, "G5");
  const MinorPattern k4_pattern =
      g5 ? MinorPattern(g5->matroid, "M(G5)") : fc.k4();
  if (g5) {
    report.check("G5", "g5-is-k4", is_isomorphic(g5->matroid, fc.k4().matroid()).has_value(),
                 [] { return "M(G5) is not isomorphic to M(K4)"; });
  }
  nlohmann::json evidence = nlohmann::json::object();
  nlohmann::json k4_witnesses = nlohmann::json::object();
  for (const CatalogEntry& e : catalog) {
    if (progress) progress("verify-minimal " + e.name);
    if (e.graph) {
      const Classification c = is_graphic(e.matroid);
      report.check(e.name, "catalog-graph-is-graphic", c.holds,
                   [&] { return c.offending + " minor"; });
    }
    if (!e.claimed) continue;
    const MinorPattern* target = fc.find(e.claimed->target);
    if (!target) {
      report.record(e.name, "claimed-form-holds", false,
                    "unknown target " + e.claimed->target);
      continue;
    }
    const auto bij = check_claim(e);
    report.check(e.name, "claimed-form-holds", bij.has_value(), [&] {
      return std::string(form_notation(e.claimed->form)) + " of {" +
             e.marked_pair->first + "," + e.marked_pair->second +
             "} is not isomorphic to " + e.claimed->target;
    });
    const auto series = series_pairs(e.matroid);
    report.check(e.name, "no-series-pair", series.empty(), [&] {
      return series.front().first + " and " + series.front().second +
             " are in series";
    });
    if (series.empty()) {
      const auto found = verify_minimal(e.matroid, target->matroid());
      report.check(
          e.name, "verify-minimal-finds-claimed-form",
          found && found->form == e.claimed->form, [&] {
            return found ? "first evidence has form " +
                               std::string(form_notation(found->form))
                         : std::string("no evidence");
          });
      if (found) {
        evidence[e.name] = {{"target", target->name()},
                            {"x", found->x},
                            {"y", found->y},
                            {"form", form_notation(found->form)},
                            {"bijection", found->bijection}};
      }
      for (const MinimalEvidence& ev :
           all_minimal_evidence(e.matroid, target->matroid())) {
        check_minimal_consequences(report, e.name, e.matroid, target->name(),
                                   ev);
      }
    }
    check_splitting_minors(report, e.name, e.matroid);
    if (&e == g5) continue;
    const auto w = find_minor(e.matroid, k4_pattern);
    const bool verified =
        w && check_witness(e.matroid, k4_pattern.matroid(), *w);
    report.check(e.name, "has-k4-minor", verified, [&] {
      return w ? "witness does not verify" : "no M(K4) minor";
    });
    if (w) k4_witnesses[e.name] = witness_json(*w);
  }
  report.details()["evidence"] = std::move(evidence);
  report.details()["k4_minor_witnesses"] = std::move(k4_witnesses);
  return report;
}

TheoremCase evaluate_theorem_case(const Graph& g) {
  TheoremCase out;
  out.matroid = cycle_matroid(g);
  const BinaryMatroid& m = out.matroid;
  out.k4_witness = find_minor(m, ForbiddenCatalog::instance().k4());
  const std::string a = default_new_label(m);
  for (std::size_t i = 0; i < m.size() && !out.failing_pair; ++i) {
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      const LabelSet pair{m.labels()[i], m.labels()[j]};
      Classification c = is_cographic(element_split(m, pair, a));
      if (!c.holds) {
        out.failing_pair.emplace(m.labels()[i], m.labels()[j]);
        out.offending = c.offending;
        out.offending_witness = std::move(c.witness);
        break;
      }
    }
  }
  return out;
}

VerificationReport verify_main_theorem(const TheoremCampaignOptions& options) {
  const EnumerationCaps& caps = options.caps;
  if (caps.max_vertices > kTheoremMaxVertices ||
      caps.max_edges > kTheoremMaxEdges) {
    throw MatroidError(ErrorCode::kCapExceeded,
                       "theorem verification supports at most 7 vertices "
                       "and 12 edges");
  }
  const std::vector<Graph> graphs = enumerate_connected_graphs(caps);
  VerificationReport report("verify-theorem",
                            {{"max_vertices", caps.max_vertices},
                             {"max_edges", caps.max_edges},
                             {"max_multiplicity", caps.max_multiplicity}});
  for (const char* id : {"cographic-splittings-iff-no-k4-minor",
                         "k4-minor-witness-verifies",
                         "offending-minor-witness-verifies"}) {
    report.declare(id);
  }
  report.details()["graphs"] = graphs.size();
  const auto& fc = ForbiddenCatalog::instance();
  return run_parallel(
      std::move(report), graphs.size(), options.jobs, options.progress,
      "verify-theorem graphs", [&](std::size_t i) {
        VerificationReport r;
        const Graph& g = graphs[i];
        const std::string id = graph_id(i, g);
        const TheoremCase t = evaluate_theorem_case(g);
        const bool p = t.all_splittings_cographic();
        const bool q = !t.has_k4_minor();
        if (!q) r.count_detail("graphs_with_k4_minor");
        if (p) r.count_detail("graphs_with_all_splittings_cographic");
        r.check(id, "cographic-splittings-iff-no-k4-minor", p == q, [&] {
          if (p) return "every splitting cographic, yet M(K4) minor: " +
                        describe(*t.k4_witness);
          return "no M(K4) minor, yet splitting of {" + t.failing_pair->first +
                 "," + t.failing_pair->second + "} has " + t.offending +
                 " minor: " + describe(*t.offending_witness);
        });
        if (t.k4_witness) {
          r.check(id, "k4-minor-witness-verifies",
                  check_witness(t.matroid, fc.k4().matroid(), *t.k4_witness),
                  [] { return "witness does not re-derive M(K4)"; });
        }
        if (t.failing_pair) {
          const BinaryMatroid ms = element_split(
              t.matroid, {t.failing_pair->first, t.failing_pair->second},
              default_new_label(t.matroid));
          const MinorPattern* f = fc.find(t.offending);
          r.check(id, "offending-minor-witness-verifies",
                  f && check_witness(ms, f->matroid(), *t.offending_witness),
                  [] { return "witness does not re-derive the minor"; });
        }
        return r;
      });
}

}  // namespace matroidforge
