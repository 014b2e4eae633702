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

#include "matroidforge/binary_matroid.h"

#include <algorithm>
#include <array>
#include <bit>
#include <unordered_set>

#include "matroidforge/error.h"

namespace matroidforge {

BinaryMatroid::BinaryMatroid(std::vector<std::string> labels,
                             const GF2Matrix& rep)
    : labels_(std::move(labels)) {
  if (labels_.size() > kMaxElements) {
    throw MatroidError(ErrorCode::kGroundSetTooLarge,
                       std::to_string(labels_.size()) +
                           " elements exceed the 64-element cap");
  }
  if (labels_.size() != rep.cols()) {
    throw MatroidError(ErrorCode::kInvalidArgument,
                       "label count " + std::to_string(labels_.size()) +
                           " does not match column count " +
                           std::to_string(rep.cols()));
  }
  std::unordered_set<std::string_view> seen;
  for (const std::string& l : labels_) {
    if (l.empty()) {
      throw MatroidError(ErrorCode::kInvalidArgument, "empty element label");
    }
    if (!seen.insert(l).second) {
      throw MatroidError(ErrorCode::kDuplicateElements,
                         "label '" + l + "' appears twice");
    }
  }
  rep_ = row_reduce(rep).matrix.without_zero_rows();
  columns_.resize(labels_.size());
  for (std::size_t c = 0; c < labels_.size(); ++c) columns_[c] = rep_.column(c);
}

std::optional<std::size_t> BinaryMatroid::find(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) return i;
  }
  return std::nullopt;
}

std::size_t BinaryMatroid::index_of(std::string_view label) const {
  if (auto i = find(label)) return *i;
  throw MatroidError(ErrorCode::kUnknownLabel,
                     "no element labelled '" + std::string(label) + "'");
}

ElementMask BinaryMatroid::mask_of(const LabelSet& labels) const {
  ElementMask m = 0;
  for (const std::string& l : labels) m |= bit(index_of(l));
  return m;
}

LabelSet BinaryMatroid::labels_of(ElementMask mask) const {
  LabelSet out;
  for (std::size_t i : indices_of(mask & ground())) out.insert(labels_[i]);
  return out;
}

std::size_t BinaryMatroid::rank_of(ElementMask subset) const {
  std::array<Word, 64> basis{};
  std::size_t r = 0;
  for (std::size_t i : indices_of(subset & ground())) {
    Word w = columns_[i];
    while (w != 0) {
      const int low = std::countr_zero(w);
      if (basis[low] == 0) {
        basis[low] = w;
        ++r;
        break;
      }
      w ^= basis[low];
    }
  }
  return r;
}

CircuitFamily::CircuitFamily(std::vector<std::string> universe,
                             std::vector<ElementMask> members)
    : universe_(std::move(universe)), members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()),
                 members_.end());
}

bool CircuitFamily::contains(ElementMask m) const {
  return std::binary_search(members_.begin(), members_.end(), m);
}

bool CircuitFamily::contains(const LabelSet& labels) const {
  ElementMask m = 0;
  for (const std::string& l : labels) {
    auto it = std::find(universe_.begin(), universe_.end(), l);
    if (it == universe_.end()) return false;
    m |= bit(static_cast<std::size_t>(it - universe_.begin()));
  }
  return contains(m);
}

std::set<LabelSet> CircuitFamily::label_sets() const {
  std::set<LabelSet> out;
  for (ElementMask m : members_) {
    LabelSet s;
    for (std::size_t i : indices_of(m)) s.insert(universe_[i]);
    out.insert(std::move(s));
  }
  return out;
}

std::map<std::size_t, std::size_t> CircuitFamily::census() const {
  std::map<std::size_t, std::size_t> out;
  for (ElementMask m : members_) ++out[popcount(m)];
  return out;
}

bool operator==(const CircuitFamily& a, const CircuitFamily& b) {
  return a.size() == b.size() && a.label_sets() == b.label_sets();
}

CircuitFamily circuits(const BinaryMatroid& m) {
  if (m.size() > kCircuitEnumerationLimit) {
    throw MatroidError(ErrorCode::kGroundSetTooLarge,
                       "circuit enumeration is limited to 20 elements");
  }
  std::vector<ElementMask> found;
  for (std::size_t k = 1; k <= m.size(); ++k) {
    for_each_subset_of_size(m.ground(), k, [&](ElementMask s) {
      for (ElementMask c : found) {
        if (is_subset(c, s)) return false;
      }
      if (m.rank_of(s) < k) found.push_back(s);
      return false;
    });
  }
  return CircuitFamily(m.labels(), std::move(found));
}

CircuitFamily cocircuits(const BinaryMatroid& m) { return circuits(dual(m)); }

namespace {

// Kernel basis read off the reduced row-echelon representation: one vector
// per non-pivot column.
std::vector<ElementMask> kernel_basis(const BinaryMatroid& m) {
  const GF2Matrix& rep = m.representation();
  std::vector<std::size_t> pivots;
  for (std::size_t r = 0; r < rep.rows(); ++r) {
    pivots.push_back(static_cast<std::size_t>(std::countr_zero(rep.row(r))));
  }
  ElementMask pivot_mask = 0;
  for (std::size_t p : pivots) pivot_mask |= bit(p);
  std::vector<ElementMask> basis;
  for (std::size_t j : indices_of(m.ground() & ~pivot_mask)) {
    ElementMask v = bit(j);
    for (std::size_t r = 0; r < rep.rows(); ++r) {
      if (contains(rep.row(r), j)) v |= bit(pivots[r]);
    }
    basis.push_back(v);
  }
  return basis;
}

}  // namespace

std::vector<ElementMask> cycle_space(const BinaryMatroid& m) {
  const std::vector<ElementMask> basis = kernel_basis(m);
  if (basis.size() > 24) {
    throw MatroidError(ErrorCode::kGroundSetTooLarge,
                       "cycle space too large to enumerate");
  }
  const std::size_t count = std::size_t{1} << basis.size();
  std::vector<ElementMask> out(count);
  ElementMask cur = 0;
  out[0] = 0;
  for (std::size_t g = 1; g < count; ++g) {
    cur ^= basis[static_cast<std::size_t>(std::countr_zero(g))];
    out[g] = cur;
  }
  return out;
}

std::vector<ElementMask> minimal_nonempty(std::vector<ElementMask> family) {
  std::sort(family.begin(), family.end(), [](ElementMask a, ElementMask b) {
    const std::size_t pa = popcount(a);
    const std::size_t pb = popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  std::vector<ElementMask> out;
  for (ElementMask f : family) {
    if (f == 0) continue;
    bool minimal = true;
    for (ElementMask c : out) {
      if (is_subset(c, f)) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(f);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ElementMask> circuit_masks(const BinaryMatroid& m) {
  return minimal_nonempty(cycle_space(m));
}

BinaryMatroid delete_mask(const BinaryMatroid& m, ElementMask s) {
  const ElementMask keep = m.ground() & ~s;
  std::vector<std::string> labels;
  for (std::size_t i : indices_of(keep)) labels.push_back(m.labels()[i]);
  return BinaryMatroid(std::move(labels),
                       m.representation().select_columns(keep));
}

BinaryMatroid delete_elements(const BinaryMatroid& m, const LabelSet& s) {
  return delete_mask(m, m.mask_of(s));
}

BinaryMatroid contract_mask(const BinaryMatroid& m, ElementMask s) {
  s &= m.ground();
  const auto words = m.representation().row_words();
  std::vector<Word> rows(words.begin(), words.end());
  for (std::size_t e : indices_of(s)) {
    auto pivot = std::find_if(rows.begin(), rows.end(),
                              [e](Word r) { return contains(r, e); });
    if (pivot == rows.end()) continue;  // loop: contraction is deletion
    const Word p = *pivot;
    rows.erase(pivot);
    for (Word& r : rows) {
      if (contains(r, e)) r ^= p;
    }
  }
  const ElementMask keep = m.ground() & ~s;
  std::vector<std::string> labels;
  for (std::size_t i : indices_of(keep)) labels.push_back(m.labels()[i]);
  return BinaryMatroid(
      std::move(labels),
      GF2Matrix::from_rows(m.size(), std::move(rows)).select_columns(keep));
}

BinaryMatroid contract(const BinaryMatroid& m, const LabelSet& s) {
  return contract_mask(m, m.mask_of(s));
}

BinaryMatroid dual(const BinaryMatroid& m) {
  return BinaryMatroid(m.labels(),
                       GF2Matrix::from_rows(m.size(), kernel_basis(m)));
}

ElementMask loops_mask(const BinaryMatroid& m) {
  ElementMask out = 0;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m.column(i) == 0) out |= bit(i);
  }
  return out;
}

ElementMask coloops_mask(const BinaryMatroid& m) {
  ElementMask out = 0;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m.rank_of(m.ground() & ~bit(i)) < m.rank()) out |= bit(i);
  }
  return out;
}

bool is_loop(const BinaryMatroid& m, std::string_view label) {
  return m.column(m.index_of(label)) == 0;
}

bool is_coloop(const BinaryMatroid& m, std::string_view label) {
  return contains(coloops_mask(m), m.index_of(label));
}

std::vector<std::pair<std::string, std::string>> parallel_pairs(
    const BinaryMatroid& m) {
  std::vector<std::pair<std::string, std::string>> out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m.column(i) == 0) continue;
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      if (m.column(i) == m.column(j)) {
        out.emplace_back(m.labels()[i], m.labels()[j]);
      }
    }
  }
  return out;
}

std::vector<std::pair<std::string, std::string>> series_pairs(
    const BinaryMatroid& m) {
  return parallel_pairs(dual(m));
}

bool same_matroid(const BinaryMatroid& a, const BinaryMatroid& b) {
  if (a.size() != b.size() || a.rank() != b.rank()) return false;
  const LabelSet la(a.labels().begin(), a.labels().end());
  const LabelSet lb(b.labels().begin(), b.labels().end());
  if (la != lb) return false;
  return CircuitFamily(a.labels(), circuit_masks(a)) ==
         CircuitFamily(b.labels(), circuit_masks(b));
}

}  // namespace matroidforge
