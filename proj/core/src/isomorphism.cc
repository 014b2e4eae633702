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

#include "matroidforge/isomorphism.h"

#include <algorithm>
#include <numeric>

#include "matroidforge/error.h"

namespace matroidforge {
namespace {

std::uint64_t size_weight(std::size_t size) {
  // Any injective-ish function of the size works; collisions only weaken
  // pruning.
  return 1 + static_cast<std::uint64_t>(size) * 0x9E3779B97F4A7C15ULL;
}

class Search {
 public:
  Search(const CircuitStructure& a, const CircuitStructure& b)
      : a_(a), b_(b), n_(a.size()) {}

  std::optional<std::vector<std::size_t>> run() {
    choose_order();
    image_.assign(n_, kUnset);
    used_.assign(n_, false);
    if (!extend(0)) return std::nullopt;
    return image_;
  }

 private:
  static constexpr std::size_t kUnset = ~std::size_t{0};

  // Elements with the rarest signature first, then greedily the element
  // sharing the most circuits with those already placed, so circuit checks
  // fire as early as possible.
  void choose_order() {
    std::vector<std::size_t> rarity(n_, 0);
    for (std::size_t e = 0; e < n_; ++e) {
      for (std::size_t f = 0; f < n_; ++f) {
        if (b_.signature(f) == a_.signature(e)) ++rarity[e];
      }
    }
    std::vector<bool> placed(n_, false);
    std::vector<std::uint64_t> shared(n_, 0);
    order_.clear();
    for (std::size_t step = 0; step < n_; ++step) {
      std::size_t best = kUnset;
      for (std::size_t e = 0; e < n_; ++e) {
        if (placed[e]) continue;
        if (best == kUnset || shared[e] > shared[best] ||
            (shared[e] == shared[best] && rarity[e] < rarity[best])) {
          best = e;
        }
      }
      placed[best] = true;
      order_.push_back(best);
      for (ElementMask c : a_.circuits()) {
        if (!contains(c, best)) continue;
        for (std::size_t f : indices_of(c)) {
          if (!placed[f]) ++shared[f];
        }
      }
    }
    // Circuits of `a` grouped by the depth at which their last element is
    // placed.
    std::vector<std::size_t> depth_of(n_);
    for (std::size_t d = 0; d < n_; ++d) depth_of[order_[d]] = d;
    completes_at_.assign(n_, {});
    for (ElementMask c : a_.circuits()) {
      std::size_t last = 0;
      for (std::size_t e : indices_of(c)) last = std::max(last, depth_of[e]);
      completes_at_[last].push_back(c);
    }
  }

  bool extend(std::size_t depth) {
    if (depth == n_) return true;
    const std::size_t e = order_[depth];
    for (std::size_t f = 0; f < n_; ++f) {
      if (used_[f] || a_.signature(e) != b_.signature(f)) continue;
      if (a_.pair_weight(e, e) != b_.pair_weight(f, f)) continue;
      bool ok = true;
      for (std::size_t d = 0; d < depth && ok; ++d) {
        const std::size_t p = order_[d];
        ok = a_.pair_weight(e, p) == b_.pair_weight(f, image_[p]);
      }
      if (!ok) continue;
      image_[e] = f;
      used_[f] = true;
      for (ElementMask c : completes_at_[depth]) {
        ElementMask mapped = 0;
        for (std::size_t g : indices_of(c)) mapped |= bit(image_[g]);
        if (!b_.has_circuit(mapped)) {
          ok = false;
          break;
        }
      }
      if (ok && extend(depth + 1)) return true;
      used_[f] = false;
      image_[e] = kUnset;
    }
    return false;
  }

  const CircuitStructure& a_;
  const CircuitStructure& b_;
  std::size_t n_;
  std::vector<std::size_t> order_;
  std::vector<std::vector<ElementMask>> completes_at_;
  std::vector<std::size_t> image_;
  std::vector<bool> used_;
};

}  // namespace

CircuitStructure::CircuitStructure(std::size_t n,
                                   std::vector<ElementMask> circuits)
    : n_(n),
      circuits_(std::move(circuits)),
      census_(n + 1, 0),
      signatures_(n, std::vector<std::uint32_t>(n + 1, 0)),
      pair_weights_(n * n, 0) {
  std::sort(circuits_.begin(), circuits_.end());
  circuits_.erase(std::unique(circuits_.begin(), circuits_.end()),
                  circuits_.end());
  for (ElementMask c : circuits_) {
    const std::size_t size = popcount(c);
    ++census_[size];
    const std::vector<std::size_t> members = indices_of(c);
    for (std::size_t e : members) {
      ++signatures_[e][size];
      for (std::size_t f : members) pair_weights_[e * n_ + f] += size_weight(size);
    }
  }
}

bool CircuitStructure::has_circuit(ElementMask m) const {
  return std::binary_search(circuits_.begin(), circuits_.end(), m);
}

std::optional<std::vector<std::size_t>> find_circuit_isomorphism(
    const CircuitStructure& a, const CircuitStructure& b) {
  if (a.size() != b.size() || a.census() != b.census()) return std::nullopt;
  std::vector<std::vector<std::uint32_t>> sa;
  std::vector<std::vector<std::uint32_t>> sb;
  for (std::size_t e = 0; e < a.size(); ++e) {
    sa.push_back(a.signature(e));
    sb.push_back(b.signature(e));
  }
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa != sb) return std::nullopt;
  return Search(a, b).run();
}

std::optional<Bijection> is_isomorphic(const BinaryMatroid& m,
                                       const BinaryMatroid& n) {
  if (m.size() > kIsomorphismLimit || n.size() > kIsomorphismLimit) {
    throw MatroidError(ErrorCode::kGroundSetTooLarge,
                       "isomorphism testing is limited to 14 elements");
  }
  if (m.size() != n.size() || m.rank() != n.rank()) return std::nullopt;
  const CircuitStructure a(m.size(), circuit_masks(m));
  const CircuitStructure b(n.size(), circuit_masks(n));
  auto perm = find_circuit_isomorphism(a, b);
  if (!perm) return std::nullopt;
  Bijection out;
  for (std::size_t e = 0; e < m.size(); ++e) {
    out[m.labels()[e]] = n.labels()[(*perm)[e]];
  }
  return out;
}

}  // namespace matroidforge
