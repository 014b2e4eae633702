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

#include "matroidforge/minors.h"

#include <algorithm>
#include <set>

#include "matroidforge/error.h"

namespace matroidforge {
namespace {

std::vector<std::uint32_t> histogram(const std::vector<ElementMask>& family,
                                     std::size_t n) {
  std::vector<std::uint32_t> h(n + 1, 0);
  for (ElementMask z : family) ++h[popcount(z)];
  return h;
}

ElementMask compact(ElementMask m, const std::vector<std::size_t>& kept) {
  ElementMask out = 0;
  for (std::size_t j = 0; j < kept.size(); ++j) {
    if (contains(m, kept[j])) out |= bit(j);
  }
  return out;
}

}  // namespace

MinorPattern::MinorPattern(BinaryMatroid target, std::string name)
    : target_(std::move(target)),
      name_(std::move(name)),
      structure_(target_.size(), circuit_masks(target_)),
      cycle_histogram_(histogram(cycle_space(target_), target_.size())) {}

std::optional<MinorWitness> find_minor(const BinaryMatroid& m,
                                       const MinorPattern& pattern) {
  if (m.size() > kMinorSearchLimit) {
    throw MatroidError(ErrorCode::kGroundSetTooLarge,
                       "minor search is limited to 24 elements");
  }
  const BinaryMatroid& target = pattern.matroid();
  if (target.size() > m.size() || target.rank() > m.rank()) return std::nullopt;
  const std::size_t contract_count = m.rank() - target.rank();
  if (m.size() - m.rank() < pattern.corank()) return std::nullopt;
  const std::size_t delete_count = m.size() - target.size() - contract_count;

  const std::vector<ElementMask> cycles = cycle_space(m);
  const std::size_t wanted = std::size_t{1} << pattern.corank();
  const std::size_t n = target.size();

  std::optional<MinorWitness> found;
  std::vector<std::uint32_t> hist(n + 1);
  std::vector<ElementMask> projected;
  for_each_subset_of_size(m.ground(), contract_count, [&](ElementMask c) {
    if (!m.is_independent(c)) return false;
    const ElementMask rest = m.ground() & ~c;
    return for_each_subset_of_size(rest, delete_count, [&](ElementMask d) {
      std::fill(hist.begin(), hist.end(), 0);
      projected.clear();
      for (ElementMask z : cycles) {
        if ((z & d) != 0) continue;
        if (projected.size() == wanted) return false;
        const ElementMask p = z & ~c;
        ++hist[popcount(p)];
        projected.push_back(p);
      }
      if (projected.size() != wanted || hist != pattern.cycle_histogram()) {
        return false;
      }
      const std::vector<std::size_t> kept = indices_of(rest & ~d);
      for (ElementMask& p : projected) p = compact(p, kept);
      const CircuitStructure minor(n, minimal_nonempty(projected));
      auto perm = find_circuit_isomorphism(minor, pattern.structure());
      if (!perm) return false;
      MinorWitness w;
      w.deleted = m.labels_of(d);
      w.contracted = m.labels_of(c);
      for (std::size_t j = 0; j < kept.size(); ++j) {
        w.bijection[m.labels()[kept[j]]] = target.labels()[(*perm)[j]];
      }
      found = std::move(w);
      return true;
    });
  });
  return found;
}

std::optional<MinorWitness> has_minor(const BinaryMatroid& m,
                                      const BinaryMatroid& n) {
  return find_minor(m, MinorPattern(n));
}

bool check_witness(const BinaryMatroid& m, const BinaryMatroid& target,
                   const MinorWitness& w) {
  for (const std::string& l : w.deleted) {
    if (w.contracted.count(l) != 0 || !m.find(l)) return false;
  }
  for (const std::string& l : w.contracted) {
    if (!m.find(l)) return false;
  }
  const BinaryMatroid minor = contract(delete_elements(m, w.deleted), w.contracted);
  if (minor.size() != target.size() || w.bijection.size() != minor.size()) {
    return false;
  }
  std::set<std::string> images;
  for (const std::string& l : minor.labels()) {
    auto it = w.bijection.find(l);
    if (it == w.bijection.end() || !target.find(it->second)) return false;
    images.insert(it->second);
  }
  if (images.size() != target.size()) return false;
  std::vector<ElementMask> mapped;
  for (ElementMask c : circuit_masks(minor)) {
    ElementMask img = 0;
    for (std::size_t i : indices_of(c)) {
      img |= bit(target.index_of(w.bijection.at(minor.labels()[i])));
    }
    mapped.push_back(img);
  }
  std::sort(mapped.begin(), mapped.end());
  return mapped == circuit_masks(target);
}

}  // namespace matroidforge
