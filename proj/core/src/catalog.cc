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

#include "matroidforge/catalog.h"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "matroidforge/error.h"
#include "matroidforge/matroid_io.h"

namespace matroidforge {
namespace {

// (prefix, number) so that G2 sorts before G10.
std::pair<std::string, long> natural_key(const std::string& name) {
  std::size_t i = name.size();
  while (i > 0 && std::isdigit(static_cast<unsigned char>(name[i - 1]))) --i;
  if (i == name.size()) return {name, -1};
  return {name.substr(0, i), std::stol(name.substr(i))};
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw MatroidError(ErrorCode::kIoError,
                       "cannot read " + path.string());
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Matrix files whose stem names an excluded minor.
const char* excluded_minor_for_stem(std::string_view stem) {
  if (stem == "F7") return "F7";
  if (stem == "F7star") return "F7*";
  return nullptr;
}

}  // namespace

std::filesystem::path default_catalog_dir() {
  if (const char* env = std::getenv("MATROIDFORGE_CATALOG"); env && *env) {
    return env;
  }
  std::filesystem::path source = MATROIDFORGE_CATALOG_DIR_SOURCE;
  std::error_code ec;
  if (std::filesystem::is_directory(source, ec)) return source;
  return MATROIDFORGE_CATALOG_DIR_INSTALL;
}

CatalogEntry catalog_entry_from_json(const nlohmann::json& j, std::string name,
                                     std::string_view source) {
  Graph g = graph_from_json(j, source);
  auto fail = [&](const std::string& what) -> MatroidError {
    return MatroidError(ErrorCode::kParseError,
                        std::string(source) + ": " + what);
  };
  CatalogEntry entry{std::move(name), g, cycle_matroid(g), std::nullopt,
                     std::nullopt, ""};
  const bool has_x = j.contains("x"), has_y = j.contains("y");
  if (has_x != has_y) throw fail("'x' and 'y' must be given together");
  if (has_x) {
    if (!j["x"].is_string() || !j["y"].is_string()) {
      throw fail("'x' and 'y' must be edge labels");
    }
    std::string x = j["x"], y = j["y"];
    if (x == y) throw fail("'x' and 'y' must differ");
    if (!g.find_edge(x) || !g.find_edge(y)) {
      throw fail("marked pair {" + x + ", " + y + "} is not a pair of edges");
    }
    entry.marked_pair.emplace(std::move(x), std::move(y));
  }
  if (j.contains("claimed")) {
    const auto& c = j["claimed"];
    if (!c.is_object() || !c.contains("form") || !c["form"].is_string() ||
        !c.contains("target") || !c["target"].is_string()) {
      throw fail("'claimed' must be {\"form\": ..., \"target\": ...}");
    }
    auto form = parse_form(c["form"].get<std::string>());
    if (!form) throw fail("unknown form '" + c["form"].get<std::string>() + "'");
    if (!entry.marked_pair) throw fail("a claim needs a marked pair");
    entry.claimed = Claim{*form, c["target"].get<std::string>()};
  }
  if (j.contains("note")) {
    if (!j["note"].is_string()) throw fail("'note' must be a string");
    entry.note = j["note"];
  }
  return entry;
}

std::optional<Bijection> check_claim(const CatalogEntry& entry) {
  if (!entry.claimed || !entry.marked_pair) {
    throw MatroidError(ErrorCode::kInvalidArgument,
                       entry.name + " has no claim to check");
  }
  const MinorPattern* target =
      ForbiddenCatalog::instance().find(entry.claimed->target);
  if (!target) {
    throw MatroidError(ErrorCode::kInvalidArgument,
                       entry.name + " claims unknown target '" +
                           entry.claimed->target + "'");
  }
  return check_form(entry.matroid, target->matroid(), entry.marked_pair->first,
                    entry.marked_pair->second, entry.claimed->form);
}

std::vector<CatalogEntry> load_catalog(const std::filesystem::path& dir,
                                       bool strict) {
  std::error_code ec;
  if (!std::filesystem::is_directory(dir, ec)) {
    throw MatroidError(ErrorCode::kIoError,
                       "catalog directory not found: " + dir.string());
  }
  std::vector<std::filesystem::path> files;
  for (const auto& item : std::filesystem::directory_iterator(dir)) {
    const auto ext = item.path().extension();
    if (item.is_regular_file() && (ext == ".json" || ext == ".bm")) {
      files.push_back(item.path());
    }
  }
  std::sort(files.begin(), files.end(), [](const auto& a, const auto& b) {
    return natural_key(a.stem().string()) < natural_key(b.stem().string());
  });

  std::vector<CatalogEntry> out;
  for (const auto& path : files) {
    std::string stem = path.stem().string();
    if (path.extension() == ".bm") {
      BinaryMatroid m = read_bm_file(path);
      if (strict) {
        if (const char* name = excluded_minor_for_stem(stem)) {
          const MinorPattern* p = ForbiddenCatalog::instance().find(name);
          if (!is_isomorphic(m, p->matroid())) {
            throw MatroidError(ErrorCode::kTranscriptionInvalid,
                               path.string() + " is not isomorphic to " + name);
          }
        }
      }
      out.push_back(CatalogEntry{std::move(stem), std::nullopt, std::move(m),
                                 std::nullopt, std::nullopt, ""});
      continue;
    }
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(read_text(path));
    } catch (const nlohmann::json::parse_error& e) {
      throw MatroidError(ErrorCode::kParseError,
                         path.string() + ": " + e.what());
    }
    CatalogEntry entry = catalog_entry_from_json(j, stem, path.string());
    if (strict && entry.claimed && !check_claim(entry)) {
      throw MatroidError(
          ErrorCode::kTranscriptionInvalid,
          path.string() + ": form " +
              std::string(form_notation(entry.claimed->form)) +
              " is not isomorphic to " + entry.claimed->target + " for {" +
              entry.marked_pair->first + ", " + entry.marked_pair->second +
              "}");
    }
    out.push_back(std::move(entry));
  }
  return out;
}

std::vector<CatalogEntry> load_catalog() {
  return load_catalog(default_catalog_dir(), true);
}

const CatalogEntry* find_entry(const std::vector<CatalogEntry>& catalog,
                               std::string_view name) {
  for (const CatalogEntry& e : catalog) {
    if (e.name == name) return &e;
  }
  return nullptr;
}

}  // namespace matroidforge
