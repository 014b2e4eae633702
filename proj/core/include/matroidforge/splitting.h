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

#ifndef MATROIDFORGE_SPLITTING_H_
#define MATROIDFORGE_SPLITTING_H_

#include <optional>
#include <string>
#include <string_view>

#include "matroidforge/binary_matroid.h"

namespace matroidforge {

// The splitting set X and the label of the element added by element
// splitting.
struct SplitSpec {
  LabelSet splitting_set;
  std::string new_label;
};

// "a", then "a1", "a2", ... until the label is free in `m`.
std::string default_new_label(const BinaryMatroid& m);

// Checks X is a nonempty subset of E(m) and new_label is not in E(m).
// Throws UnknownLabel / LabelCollision / InvalidArgument.
void validate(const SplitSpec& spec, const BinaryMatroid& m);

// M_{x,y}: one extra row with ones exactly in columns x and y.
// Throws UnknownLabel, DuplicateElements (x == y).
BinaryMatroid split(const BinaryMatroid& m, std::string_view x,
                    std::string_view y);

// M'_X: the extra row of split() for the set X plus a new element whose
// column is the unit vector of that row. Rank grows by exactly one.
BinaryMatroid element_split(const BinaryMatroid& m, const SplitSpec& spec);
BinaryMatroid element_split(const BinaryMatroid& m, const LabelSet& x,
                            std::optional<std::string> new_label = {});

// How odd-meeting circuit pairs are combined when building the circuits of
// the split matroid that avoid the new element. kDisjoint is the rule that
// agrees with the matrix construction; kIntersecting is the alternative
// reading kept for comparison.
enum class PairRule { kDisjoint, kIntersecting };

struct OracleOptions {
  PairRule pair_rule = PairRule::kDisjoint;
  // Drop unions that contain an even-meeting circuit before taking minimal
  // members. Turning it off exists only to show the filter is needed.
  bool exclude_even_supersets = true;
};

// Circuits of M'_X computed set-theoretically from the circuits of M:
//   even  = circuits meeting X in an even number of elements,
//   pairs = minimal unions of two odd-meeting circuits (combined per
//           PairRule) that contain no even-meeting circuit,
//   plus  = {C + a : C odd-meeting}.
// Uses no matrix arithmetic. The result's universe is C's universe followed
// by `new_label`.
CircuitFamily element_split_circuits_oracle(const CircuitFamily& c,
                                            const LabelSet& x,
                                            const std::string& new_label,
                                            OracleOptions options = {});

struct SplittingCocircuitFacts {
  bool pair_is_cocircuit = false;           // {x,y} is a cocircuit of M
  bool pair_contains_no_cocircuit = false;  // no cocircuit of M inside {x,y}
  bool new_element_is_cocircuit = false;    // {a} is a cocircuit of M'
  bool pair_is_cocircuit_after = false;     // {x,y} is a cocircuit of M'
  bool triple_is_cocircuit = false;         // {x,y,a} is a cocircuit of M'
  // True when the implications expected of the two cases hold:
  // pair cocircuit => {a}, {x,y} cocircuits of M';
  // no cocircuit in pair => {x,y,a} cocircuit of M'.
  bool consistent = false;
};

SplittingCocircuitFacts splitting_cocircuit_facts(const BinaryMatroid& m,
                                                  std::string_view x,
                                                  std::string_view y);

}  // namespace matroidforge

#endif  // MATROIDFORGE_SPLITTING_H_
