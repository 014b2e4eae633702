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

#ifndef MATROIDFORGE_ELEMENT_MASK_H_
#define MATROIDFORGE_ELEMENT_MASK_H_

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace matroidforge {

// One machine word. Used both for a packed matrix row and for a subset of
// column (element) indices.
using Word = std::uint64_t;
using ElementMask = std::uint64_t;

inline constexpr std::size_t kMaxElements = 64;

constexpr ElementMask bit(std::size_t i) { return ElementMask{1} << i; }

constexpr ElementMask low_mask(std::size_t n) {
  return n >= 64 ? ~ElementMask{0} : (ElementMask{1} << n) - 1;
}

constexpr std::size_t popcount(ElementMask m) {
  return static_cast<std::size_t>(std::popcount(m));
}

constexpr bool contains(ElementMask m, std::size_t i) { return (m >> i) & 1U; }

constexpr bool is_subset(ElementMask sub, ElementMask super) {
  return (sub & ~super) == 0;
}

inline std::vector<std::size_t> indices_of(ElementMask m) {
  std::vector<std::size_t> out;
  out.reserve(popcount(m));
  while (m != 0) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(m)));
    m &= m - 1;
  }
  return out;
}

// Calls fn(mask) for every k-element subset of `universe`, in lexicographic
// order of the sorted index tuples. Stops early when fn returns true and
// reports whether it did.
template <typename Fn>
bool for_each_subset_of_size(ElementMask universe, std::size_t k, Fn&& fn) {
  const std::vector<std::size_t> items = indices_of(universe);
  const std::size_t n = items.size();
  if (k > n) return false;
  std::vector<std::size_t> pick(k);
  for (std::size_t i = 0; i < k; ++i) pick[i] = i;
  while (true) {
    ElementMask m = 0;
    for (std::size_t i : pick) m |= bit(items[i]);
    if (fn(m)) return true;
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) return false;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
}

}  // namespace matroidforge

#endif  // MATROIDFORGE_ELEMENT_MASK_H_
