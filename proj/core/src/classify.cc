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

#include "matroidforge/classify.h"

#include <algorithm>

#include "matroidforge/error.h"
#include "matroidforge/splitting.h"

namespace matroidforge {
namespace {

BinaryMatroid literal(std::vector<std::string> labels,
                      const std::vector<std::string>& rows) {
  return BinaryMatroid(std::move(labels), GF2Matrix::from_strings(rows));
}

void expect_shape(const MinorPattern& p, std::size_t size, std::size_t rank,
                  std::size_t circuit_count) {
  const BinaryMatroid& m = p.matroid();
  if (m.size() != size || m.rank() != rank ||
      p.structure().circuits().size() != circuit_count) {
    throw MatroidError(
        ErrorCode::kTranscriptionInvalid,
        "excluded-minor catalog entry " + p.name() + " failed validation: " +
            std::to_string(m.size()) + " elements, rank " +
            std::to_string(m.rank()) + ", " +
            std::to_string(p.structure().circuits().size()) + " circuits");
  }
}

}  // namespace

// Columns are the seven nonzero vectors of GF(2)^3.
BinaryMatroid fano_matroid() {
  return literal({"1", "2", "3", "4", "5", "6", "7"},
                 {"1001101", "0101011", "0010111"});
}

BinaryMatroid fano_dual_matroid() {
  return literal({"1", "2", "3", "4", "5", "6", "7"},
                 {"1101000", "1010100", "0110010", "1110001"});
}

// Vertex-edge incidence matrices with the last vertex row dropped.
BinaryMatroid k4_cycle_matroid() {
  return literal({"01", "02", "03", "12", "13", "23"},
                 {"111000", "100110", "010101"});
}

BinaryMatroid k5_cycle_matroid() {
  return literal({"01", "02", "03", "04", "12", "13", "14", "23", "24", "34"},
                 {"1111000000", "1000111000", "0100100110", "0010010101"});
}

// Sides {0,1,2} and {3,4,5}.
BinaryMatroid k33_cycle_matroid() {
  return literal({"03", "04", "05", "13", "14", "15", "23", "24", "25"},
                 {"111000000", "000111000", "000000111", "100100100",
                  "010010010"});
}

ForbiddenCatalog::ForbiddenCatalog()
    : f7_(fano_matroid(), "F7"),
      f7_dual_(fano_dual_matroid(), "F7*"),
      k5_(k5_cycle_matroid(), "M(K5)"),
      k33_(k33_cycle_matroid(), "M(K3,3)"),
      k5_dual_(dual(k5_cycle_matroid()), "M*(K5)"),
      k33_dual_(dual(k33_cycle_matroid()), "M*(K3,3)"),
      k4_(k4_cycle_matroid(), "M(K4)") {
  expect_shape(f7_, 7, 3, 14);
  expect_shape(f7_dual_, 7, 4, 7);
  expect_shape(k5_, 10, 4, 37);
  expect_shape(k33_, 9, 5, 15);
  expect_shape(k5_dual_, 10, 6, 15);
  expect_shape(k33_dual_, 9, 4, 24);
  expect_shape(k4_, 6, 3, 7);
  if (is_isomorphic(f7_dual_.matroid(), dual(f7_.matroid())) == std::nullopt) {
    throw MatroidError(ErrorCode::kTranscriptionInvalid,
                       "F7* literal is not the dual of F7");
  }
}

const ForbiddenCatalog& ForbiddenCatalog::instance() {
  static const ForbiddenCatalog catalog;
  return catalog;
}

std::vector<const MinorPattern*> ForbiddenCatalog::graphic_excluded() const {
  return {&f7_, &f7_dual_, &k33_dual_, &k5_dual_};
}

std::vector<const MinorPattern*> ForbiddenCatalog::cographic_excluded() const {
  return {&f7_, &f7_dual_, &k33_, &k5_};
}

std::vector<const MinorPattern*> ForbiddenCatalog::splitting_targets() const {
  return {&f7_, &f7_dual_, &k5_, &k33_};
}

const MinorPattern* ForbiddenCatalog::find(std::string_view name) const {
  for (const MinorPattern* p :
       {&f7_, &f7_dual_, &k5_, &k33_, &k5_dual_, &k33_dual_, &k4_}) {
    if (p->name() == name) return p;
  }
  return nullptr;
}

namespace {

Classification classify(const BinaryMatroid& m,
                        const std::vector<const MinorPattern*>& excluded) {
  for (const MinorPattern* p : excluded) {
    if (auto w = find_minor(m, *p)) {
      return Classification{false, p->name(), std::move(w)};
    }
  }
  return Classification{true, "", std::nullopt};
}

bool exact_cover(ElementMask uncovered, const std::vector<ElementMask>& circuits,
                 std::vector<ElementMask>& chosen) {
  if (uncovered == 0) return true;
  const std::size_t first = indices_of(uncovered & (~uncovered + 1)).front();
  for (ElementMask c : circuits) {
    if (!contains(c, first) || !is_subset(c, uncovered)) continue;
    chosen.push_back(c);
    if (exact_cover(uncovered & ~c, circuits, chosen)) return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace

Classification is_graphic(const BinaryMatroid& m) {
  return classify(m, ForbiddenCatalog::instance().graphic_excluded());
}

Classification is_cographic(const BinaryMatroid& m) {
  return classify(m, ForbiddenCatalog::instance().cographic_excluded());
}

EulerianReport eulerian_report(const BinaryMatroid& m) {
  const std::vector<ElementMask> cs = circuit_masks(m);
  EulerianReport r;
  ElementMask covered = 0;
  for (ElementMask c : cs) covered |= c;
  r.union_of_circuits = covered == m.ground();
  std::vector<ElementMask> chosen;
  r.disjoint_partition = exact_cover(m.ground(), cs, chosen);
  if (r.disjoint_partition) {
    for (ElementMask c : chosen) r.partition.push_back(m.labels_of(c));
  }
  return r;
}

bool is_eulerian(const BinaryMatroid& m) {
  return eulerian_report(m).disjoint_partition;
}

std::string_view form_notation(SplitForm form) {
  switch (form) {
    case SplitForm::kDeleteAContractX: return "\\{a}/{x}";
    case SplitForm::kDeleteAContractXY: return "\\{a}/{x,y}";
    case SplitForm::kWhole: return "whole";
    case SplitForm::kContractX: return "/{x}";
    case SplitForm::kContractXY: return "/{x,y}";
  }
  return "?";
}

std::optional<SplitForm> parse_form(std::string_view notation) {
  for (SplitForm f : kAllSplitForms) {
    if (form_notation(f) == notation) return f;
  }
  return std::nullopt;
}

BinaryMatroid apply_form(const BinaryMatroid& m, std::string_view x,
                         std::string_view y, SplitForm form) {
  const std::string a = default_new_label(m);
  const LabelSet pair{std::string(x), std::string(y)};
  const BinaryMatroid split_m = element_split(m, pair, a);
  switch (form) {
    case SplitForm::kDeleteAContractX:
      return contract(delete_elements(split_m, {a}), {std::string(x)});
    case SplitForm::kDeleteAContractXY:
      return contract(delete_elements(split_m, {a}), pair);
    case SplitForm::kWhole:
      return split_m;
    case SplitForm::kContractX:
      return contract(split_m, {std::string(x)});
    case SplitForm::kContractXY:
      return contract(split_m, pair);
  }
  return split_m;
}

std::optional<Bijection> check_form(const BinaryMatroid& m,
                                    const BinaryMatroid& f, std::string_view x,
                                    std::string_view y, SplitForm form) {
  const BinaryMatroid derived = apply_form(m, x, y, form);
  if (derived.size() != f.size() || derived.rank() != f.rank()) {
    return std::nullopt;
  }
  return is_isomorphic(derived, f);
}

namespace {

std::vector<MinimalEvidence> scan_minimal(const BinaryMatroid& m,
                                          const BinaryMatroid& f,
                                          bool first_only) {
  const auto series = series_pairs(m);
  if (!series.empty()) {
    throw MatroidError(ErrorCode::kSeriesPairPresent,
                       "elements '" + series.front().first + "' and '" +
                           series.front().second + "' are in series");
  }
  std::vector<MinimalEvidence> out;
  for (SplitForm form : kAllSplitForms) {
    for (std::size_t i = 0; i < m.size(); ++i) {
      for (std::size_t j = 0; j < m.size(); ++j) {
        if (i == j) continue;
        const std::string& x = m.labels()[i];
        const std::string& y = m.labels()[j];
        if (auto b = check_form(m, f, x, y, form)) {
          out.push_back(MinimalEvidence{x, y, form, std::move(*b)});
          if (first_only) return out;
        }
      }
    }
  }
  return out;
}

}  // namespace

std::optional<MinimalEvidence> verify_minimal(const BinaryMatroid& m,
                                              const BinaryMatroid& f) {
  auto found = scan_minimal(m, f, true);
  if (found.empty()) return std::nullopt;
  return std::move(found.front());
}

std::vector<MinimalEvidence> all_minimal_evidence(const BinaryMatroid& m,
                                                  const BinaryMatroid& f) {
  return scan_minimal(m, f, false);
}

}  // namespace matroidforge
