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

#ifndef MATROIDFORGE_CATALOG_H_
#define MATROIDFORGE_CATALOG_H_

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "matroidforge/binary_matroid.h"
#include "matroidforge/classify.h"
#include "matroidforge/graph.h"

namespace matroidforge {

// "The given form of M'_{x,y} is isomorphic to the named excluded minor."
struct Claim {
  SplitForm form;
  std::string target;  // a ForbiddenCatalog name, e.g. "M(K5)"
};

struct CatalogEntry {
  std::string name;
  std::optional<Graph> graph;  // absent for entries stored as matrices
  BinaryMatroid matroid;
  std::optional<std::pair<std::string, std::string>> marked_pair;
  std::optional<Claim> claimed;
  std::string note;
};

// $MATROIDFORGE_CATALOG if set, else the source-tree catalog when it exists,
// else the installed one.
std::filesystem::path default_catalog_dir();

// Graph JSON plus the optional fields "x", "y", "claimed": {"form",
// "target"} and "note". Throws ParseError on malformed input.
CatalogEntry catalog_entry_from_json(const nlohmann::json& j, std::string name,
                                     std::string_view source);

// The bijection proving the entry's claim, or none. Throws InvalidArgument
// when the entry has no claim or no marked pair, or names an unknown target.
std::optional<Bijection> check_claim(const CatalogEntry& entry);

// Reads every <name>.json and <name>.bm in `dir`, ordered by name with
// numeric suffixes compared as numbers (G2 before G10). In strict mode each
// claim must hold and matrix entries named like an excluded minor must match
// it; otherwise TranscriptionInvalid is thrown. Throws IoError when the
// directory is missing.
std::vector<CatalogEntry> load_catalog(const std::filesystem::path& dir,
                                       bool strict = true);
std::vector<CatalogEntry> load_catalog();

const CatalogEntry* find_entry(const std::vector<CatalogEntry>& catalog,
                               std::string_view name);

}  // namespace matroidforge

#endif  // MATROIDFORGE_CATALOG_H_
