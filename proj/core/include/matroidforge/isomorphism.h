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

#ifndef MATROIDFORGE_ISOMORPHISM_H_
#define MATROIDFORGE_ISOMORPHISM_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "matroidforge/binary_matroid.h"

namespace matroidforge {

// Element-label map from one matroid onto another.
using Bijection = std::map<std::string, std::string>;

// Circuits of an n-element set together with the invariants used to prune
// the isomorphism search.
class CircuitStructure {
 public:
  CircuitStructure(std::size_t n, std::vector<ElementMask> circuits);

  std::size_t size() const { return n_; }
  const std::vector<ElementMask>& circuits() const { return circuits_; }
  // Circuits per size, index = size.
  const std::vector<std::uint32_t>& census() const { return census_; }
  // Per element: circuits containing it, per size.
  const std::vector<std::uint32_t>& signature(std::size_t e) const {
    return signatures_[e];
  }
  // Hash of the sizes of the circuits containing both e and f.
  std::uint64_t pair_weight(std::size_t e, std::size_t f) const {
    return pair_weights_[e * n_ + f];
  }
  bool has_circuit(ElementMask m) const;

 private:
  std::size_t n_;
  std::vector<ElementMask> circuits_;
  std::vector<std::uint32_t> census_;
  std::vector<std::vector<std::uint32_t>> signatures_;
  std::vector<std::uint64_t> pair_weights_;
};

// Backtracking search for a permutation p (element e of `a` goes to p[e] of
// `b`) mapping the circuits of `a` exactly onto those of `b`. Deterministic.
std::optional<std::vector<std::size_t>> find_circuit_isomorphism(
    const CircuitStructure& a, const CircuitStructure& b);

inline constexpr std::size_t kIsomorphismLimit = 14;

// Label bijection from m onto n preserving circuits, if one exists. Throws
// GroundSetTooLarge above 14 elements.
std::optional<Bijection> is_isomorphic(const BinaryMatroid& m,
                                       const BinaryMatroid& n);

}  // namespace matroidforge

#endif  // MATROIDFORGE_ISOMORPHISM_H_
