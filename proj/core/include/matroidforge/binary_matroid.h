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

#ifndef MATROIDFORGE_BINARY_MATROID_H_
#define MATROIDFORGE_BINARY_MATROID_H_

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "matroidforge/element_mask.h"
#include "matroidforge/gf2_matrix.h"

namespace matroidforge {

using LabelSet = std::set<std::string>;

// Matroid represented over GF(2). Element i carries labels()[i] and is column
// i of the representation. The stored representation is kept in reduced
// row-echelon form with zero rows dropped; since a binary matroid determines
// its row space, that form is canonical for a fixed label order.
class BinaryMatroid {
 public:
  BinaryMatroid() = default;
  BinaryMatroid(std::vector<std::string> labels, const GF2Matrix& rep);

  const std::vector<std::string>& labels() const { return labels_; }
  const GF2Matrix& representation() const { return rep_; }
  std::size_t size() const { return labels_.size(); }
  std::size_t rank() const { return rep_.rows(); }
  ElementMask ground() const { return low_mask(size()); }

  std::optional<std::size_t> find(std::string_view label) const;
  // Throws UnknownLabel.
  std::size_t index_of(std::string_view label) const;
  ElementMask mask_of(const LabelSet& labels) const;
  LabelSet labels_of(ElementMask mask) const;

  // Column i as a bit vector over the rank() rows.
  Word column(std::size_t i) const { return columns_[i]; }
  const std::vector<Word>& columns() const { return columns_; }

  std::size_t rank_of(ElementMask subset) const;
  bool is_independent(ElementMask subset) const {
    return rank_of(subset) == popcount(subset);
  }

 private:
  std::vector<std::string> labels_;
  GF2Matrix rep_;
  std::vector<Word> columns_;
};

// A family of subsets of a labelled universe, stored as sorted masks.
class CircuitFamily {
 public:
  CircuitFamily() = default;
  CircuitFamily(std::vector<std::string> universe,
                std::vector<ElementMask> members);

  const std::vector<std::string>& universe() const { return universe_; }
  const std::vector<ElementMask>& masks() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }

  bool contains(ElementMask m) const;
  bool contains(const LabelSet& labels) const;
  std::set<LabelSet> label_sets() const;
  // Member count keyed by member size.
  std::map<std::size_t, std::size_t> census() const;

  // Equality by label sets, independent of universe order.
  friend bool operator==(const CircuitFamily& a, const CircuitFamily& b);

 private:
  std::vector<std::string> universe_;
  std::vector<ElementMask> members_;
};

inline constexpr std::size_t kCircuitEnumerationLimit = 20;

// Ascending-cardinality subset scan, skipping supersets of circuits already
// found. Throws GroundSetTooLarge beyond 20 elements.
CircuitFamily circuits(const BinaryMatroid& m);
CircuitFamily cocircuits(const BinaryMatroid& m);

// All elements of the cycle space (kernel of the representation) as masks,
// including the empty set. 2^(size - rank) entries.
std::vector<ElementMask> cycle_space(const BinaryMatroid& m);
// Minimal nonempty members of a family closed under symmetric difference.
std::vector<ElementMask> minimal_nonempty(std::vector<ElementMask> family);
// Circuits via the cycle space; agrees with circuits() and is much faster
// when the corank is small.
std::vector<ElementMask> circuit_masks(const BinaryMatroid& m);

BinaryMatroid delete_elements(const BinaryMatroid& m, const LabelSet& s);
BinaryMatroid delete_mask(const BinaryMatroid& m, ElementMask s);
BinaryMatroid contract(const BinaryMatroid& m, const LabelSet& s);
BinaryMatroid contract_mask(const BinaryMatroid& m, ElementMask s);
BinaryMatroid dual(const BinaryMatroid& m);

bool is_loop(const BinaryMatroid& m, std::string_view label);
bool is_coloop(const BinaryMatroid& m, std::string_view label);
std::vector<std::pair<std::string, std::string>> parallel_pairs(
    const BinaryMatroid& m);
std::vector<std::pair<std::string, std::string>> series_pairs(
    const BinaryMatroid& m);
ElementMask loops_mask(const BinaryMatroid& m);
ElementMask coloops_mask(const BinaryMatroid& m);

// Same label set and the same circuits.
bool same_matroid(const BinaryMatroid& a, const BinaryMatroid& b);

}  // namespace matroidforge

#endif  // MATROIDFORGE_BINARY_MATROID_H_
