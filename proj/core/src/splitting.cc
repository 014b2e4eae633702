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

#include "matroidforge/splitting.h"

#include <algorithm>
#include <vector>

#include "matroidforge/error.h"

namespace matroidforge {

std::string default_new_label(const BinaryMatroid& m) {
  if (!m.find("a")) return "a";
  for (std::size_t i = 1;; ++i) {
    std::string candidate = "a" + std::to_string(i);
    if (!m.find(candidate)) return candidate;
  }
}

void validate(const SplitSpec& spec, const BinaryMatroid& m) {
  if (spec.splitting_set.empty()) {
    throw MatroidError(ErrorCode::kInvalidArgument,
                       "splitting set must be nonempty");
  }
  for (const std::string& l : spec.splitting_set) m.index_of(l);
  if (spec.new_label.empty()) {
    throw MatroidError(ErrorCode::kInvalidArgument, "new label is empty");
  }
  if (m.find(spec.new_label)) {
    throw MatroidError(ErrorCode::kLabelCollision,
                       "label '" + spec.new_label + "' already in the matroid");
  }
  if (m.size() + 1 > kMaxElements) {
    throw MatroidError(ErrorCode::kGroundSetTooLarge,
                       "element splitting would exceed 64 elements");
  }
}

BinaryMatroid split(const BinaryMatroid& m, std::string_view x,
                    std::string_view y) {
  const std::size_t ix = m.index_of(x);
  const std::size_t iy = m.index_of(y);
  if (ix == iy) {
    throw MatroidError(ErrorCode::kDuplicateElements,
                       "splitting needs two distinct elements");
  }
  return BinaryMatroid(m.labels(),
                       m.representation().with_row(bit(ix) | bit(iy)));
}

BinaryMatroid element_split(const BinaryMatroid& m, const SplitSpec& spec) {
  validate(spec, m);
  const GF2Matrix extended =
      m.representation().with_row(m.mask_of(spec.splitting_set));
  std::vector<std::string> labels = m.labels();
  labels.push_back(spec.new_label);
  return BinaryMatroid(std::move(labels),
                       extended.with_column(bit(extended.rows() - 1)));
}

BinaryMatroid element_split(const BinaryMatroid& m, const LabelSet& x,
                            std::optional<std::string> new_label) {
  return element_split(
      m, SplitSpec{x, new_label ? *new_label : default_new_label(m)});
}

CircuitFamily element_split_circuits_oracle(const CircuitFamily& c,
                                            const LabelSet& x,
                                            const std::string& new_label,
                                            OracleOptions options) {
  const std::vector<std::string>& universe = c.universe();
  if (universe.size() + 1 > kMaxElements) {
    throw MatroidError(ErrorCode::kGroundSetTooLarge,
                       "universe too large for the added element");
  }
  if (std::find(universe.begin(), universe.end(), new_label) !=
      universe.end()) {
    throw MatroidError(ErrorCode::kLabelCollision,
                       "label '" + new_label + "' already in the universe");
  }
  ElementMask x_mask = 0;
  for (const std::string& l : x) {
    auto it = std::find(universe.begin(), universe.end(), l);
    if (it == universe.end()) {
      throw MatroidError(ErrorCode::kUnknownLabel,
                         "no element labelled '" + l + "'");
    }
    x_mask |= bit(static_cast<std::size_t>(it - universe.begin()));
  }

  std::vector<ElementMask> even;
  std::vector<ElementMask> odd;
  for (ElementMask circuit : c.masks()) {
    (popcount(circuit & x_mask) % 2 == 0 ? even : odd).push_back(circuit);
  }

  std::vector<ElementMask> unions;
  for (std::size_t i = 0; i < odd.size(); ++i) {
    for (std::size_t j = i + 1; j < odd.size(); ++j) {
      const bool disjoint = (odd[i] & odd[j]) == 0;
      if (disjoint != (options.pair_rule == PairRule::kDisjoint)) continue;
      const ElementMask u = odd[i] | odd[j];
      if (options.exclude_even_supersets &&
          std::any_of(even.begin(), even.end(),
                      [u](ElementMask e) { return is_subset(e, u); })) {
        continue;
      }
      unions.push_back(u);
    }
  }

  std::vector<ElementMask> out = even;
  for (ElementMask u : minimal_nonempty(std::move(unions))) out.push_back(u);
  const ElementMask a = bit(universe.size());
  for (ElementMask circuit : odd) out.push_back(circuit | a);

  std::vector<std::string> extended = universe;
  extended.push_back(new_label);
  return CircuitFamily(std::move(extended), std::move(out));
}

SplittingCocircuitFacts splitting_cocircuit_facts(const BinaryMatroid& m,
                                                  std::string_view x,
                                                  std::string_view y) {
  const std::size_t ix = m.index_of(x);
  const std::size_t iy = m.index_of(y);
  if (ix == iy) {
    throw MatroidError(ErrorCode::kDuplicateElements,
                       "splitting needs two distinct elements");
  }
  const ElementMask pair = bit(ix) | bit(iy);
  const std::vector<ElementMask> before = circuit_masks(dual(m));

  const std::string a = default_new_label(m);
  const BinaryMatroid split_m =
      element_split(m, LabelSet{std::string(x), std::string(y)}, a);
  const std::vector<ElementMask> after = circuit_masks(dual(split_m));
  // Element indices of M are preserved in M'; a is appended last.
  const ElementMask a_bit = bit(m.size());
  auto has = [](const std::vector<ElementMask>& v, ElementMask s) {
    return std::binary_search(v.begin(), v.end(), s);
  };

  SplittingCocircuitFacts f;
  f.pair_is_cocircuit = has(before, pair);
  f.pair_contains_no_cocircuit =
      std::none_of(before.begin(), before.end(),
                   [pair](ElementMask c) { return is_subset(c, pair); });
  f.new_element_is_cocircuit = has(after, a_bit);
  f.pair_is_cocircuit_after = has(after, pair);
  f.triple_is_cocircuit = has(after, pair | a_bit);
  f.consistent =
      (!f.pair_is_cocircuit ||
       (f.new_element_is_cocircuit && f.pair_is_cocircuit_after)) &&
      (!f.pair_contains_no_cocircuit || f.triple_is_cocircuit);
  return f;
}

}  // namespace matroidforge
