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

#ifndef MATROIDFORGE_CLASSIFY_H_
#define MATROIDFORGE_CLASSIFY_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "matroidforge/binary_matroid.h"
#include "matroidforge/minors.h"

namespace matroidforge {

// Standard representations of the excluded minors, plus M(K4).
BinaryMatroid fano_matroid();
BinaryMatroid fano_dual_matroid();
BinaryMatroid k4_cycle_matroid();
BinaryMatroid k5_cycle_matroid();
BinaryMatroid k33_cycle_matroid();

// Excluded minors for graphic and cographic binary matroids. The instance is
// built once and checked (element counts, ranks, circuit counts); a failed
// check throws, since every classification depends on these matrices.
class ForbiddenCatalog {
 public:
  static const ForbiddenCatalog& instance();

  const MinorPattern& f7() const { return f7_; }
  const MinorPattern& f7_dual() const { return f7_dual_; }
  const MinorPattern& k5() const { return k5_; }
  const MinorPattern& k33() const { return k33_; }
  const MinorPattern& k5_dual() const { return k5_dual_; }
  const MinorPattern& k33_dual() const { return k33_dual_; }
  const MinorPattern& k4() const { return k4_; }

  // F7, F7*, M*(K3,3), M*(K5).
  std::vector<const MinorPattern*> graphic_excluded() const;
  // F7, F7*, M(K3,3), M(K5).
  std::vector<const MinorPattern*> cographic_excluded() const;
  // F7, F7*, M(K5), M(K3,3): the targets of minimality checks.
  std::vector<const MinorPattern*> splitting_targets() const;

  // Lookup by display name ("F7", "F7*", "M(K5)", "M(K3,3)", "M*(K5)",
  // "M*(K3,3)", "M(K4)"); nullptr when unknown.
  const MinorPattern* find(std::string_view name) const;

 private:
  ForbiddenCatalog();

  MinorPattern f7_;
  MinorPattern f7_dual_;
  MinorPattern k5_;
  MinorPattern k33_;
  MinorPattern k5_dual_;
  MinorPattern k33_dual_;
  MinorPattern k4_;
};

struct Classification {
  bool holds = false;
  std::string offending;               // excluded minor found, when !holds
  std::optional<MinorWitness> witness;

  explicit operator bool() const { return holds; }
};

Classification is_graphic(const BinaryMatroid& m);
Classification is_cographic(const BinaryMatroid& m);

// A matroid is Eulerian when its ground set is a union of circuits. Both
// readings are computed: any union (every element lies on a circuit) and a
// partition into disjoint circuits found by exact-cover search.
struct EulerianReport {
  bool union_of_circuits = false;
  bool disjoint_partition = false;
  std::vector<LabelSet> partition;  // filled when disjoint_partition
};

EulerianReport eulerian_report(const BinaryMatroid& m);
// The disjoint-partition reading.
bool is_eulerian(const BinaryMatroid& m);

// The five matroids derived from the element splitting M'_{x,y} that are
// compared against a target when testing minimality.
enum class SplitForm {
  kDeleteAContractX,   // M'_{x,y} \ {a} / {x}
  kDeleteAContractXY,  // M'_{x,y} \ {a} / {x,y}
  kWhole,              // M'_{x,y}
  kContractX,          // M'_{x,y} / {x}
  kContractXY,         // M'_{x,y} / {x,y}
};

inline constexpr SplitForm kAllSplitForms[] = {
    SplitForm::kDeleteAContractX, SplitForm::kDeleteAContractXY,
    SplitForm::kWhole, SplitForm::kContractX, SplitForm::kContractXY};

std::string_view form_notation(SplitForm form);
std::optional<SplitForm> parse_form(std::string_view notation);
BinaryMatroid apply_form(const BinaryMatroid& m, std::string_view x,
                         std::string_view y, SplitForm form);

struct MinimalEvidence {
  std::string x;
  std::string y;
  SplitForm form;
  Bijection bijection;
};

// Bijection when the given form of M'_{x,y} is isomorphic to f.
std::optional<Bijection> check_form(const BinaryMatroid& m,
                                    const BinaryMatroid& f, std::string_view x,
                                    std::string_view y, SplitForm form);

// Scans forms in declaration order and, for each, ordered pairs (x,y) in
// index order; returns the first match. Throws SeriesPairPresent when m has
// two elements in series.
std::optional<MinimalEvidence> verify_minimal(const BinaryMatroid& m,
                                              const BinaryMatroid& f);
// Every (pair, form) match, same scan order and precondition.
std::vector<MinimalEvidence> all_minimal_evidence(const BinaryMatroid& m,
                                                  const BinaryMatroid& f);

}  // namespace matroidforge

#endif  // MATROIDFORGE_CLASSIFY_H_
