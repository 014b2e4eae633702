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

#ifndef MATROIDFORGE_MINORS_H_
#define MATROIDFORGE_MINORS_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "matroidforge/binary_matroid.h"
#include "matroidforge/isomorphism.h"

namespace matroidforge {

// Certificate that contract(delete(m, deleted), contracted) is isomorphic to
// the target under `bijection` (minor label -> target label).
struct MinorWitness {
  LabelSet deleted;
  LabelSet contracted;
  Bijection bijection;
};

// A target matroid with its search invariants precomputed, so it can be
// matched against many hosts.
class MinorPattern {
 public:
  explicit MinorPattern(BinaryMatroid target, std::string name = "");

  const BinaryMatroid& matroid() const { return target_; }
  const std::string& name() const { return name_; }
  const CircuitStructure& structure() const { return structure_; }
  std::size_t corank() const { return target_.size() - target_.rank(); }
  // Cycle-space members per size; an isomorphism invariant.
  const std::vector<std::uint32_t>& cycle_histogram() const {
    return cycle_histogram_;
  }

 private:
  BinaryMatroid target_;
  std::string name_;
  CircuitStructure structure_;
  std::vector<std::uint32_t> cycle_histogram_;
};

inline constexpr std::size_t kMinorSearchLimit = 24;

// Contraction sets are independent sets of size r(m) - r(target) taken in
// lexicographic index order; for each, deletion sets are taken in
// lexicographic order. The first candidate isomorphic to the target is
// returned, so witnesses are reproducible. Throws GroundSetTooLarge when
// m has more than 24 elements.
std::optional<MinorWitness> find_minor(const BinaryMatroid& m,
                                       const MinorPattern& pattern);
std::optional<MinorWitness> has_minor(const BinaryMatroid& m,
                                      const BinaryMatroid& n);

// Re-derives the minor from the witness and checks the bijection maps its
// circuits onto the target's.
bool check_witness(const BinaryMatroid& m, const BinaryMatroid& target,
                   const MinorWitness& w);

}  // namespace matroidforge

#endif  // MATROIDFORGE_MINORS_H_
