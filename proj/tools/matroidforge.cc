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

// matroidforge: inspect binary matroids, split them, and run the
// verification campaigns.
//
// Exit status: 0 pass, 1 property failure, 2 usage or parse error,
// 3 size cap exceeded.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "matroidforge/binary_matroid.h"
#include "matroidforge/campaigns.h"
#include "matroidforge/catalog.h"
#include "matroidforge/classify.h"
#include "matroidforge/error.h"
#include "matroidforge/matroid_io.h"
#include "matroidforge/report.h"
#include "matroidforge/splitting.h"

namespace mf = matroidforge;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCap = 3;

int exit_code_for_error(mf::ErrorCode code) {
  switch (code) {
    case mf::ErrorCode::kGroundSetTooLarge:
    case mf::ErrorCode::kTooManyEdges:
    case mf::ErrorCode::kCapExceeded:
      return kExitCap;
    case mf::ErrorCode::kTranscriptionInvalid:
      return kExitFailure;
    default:
      return kExitUsage;
  }
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw mf::MatroidError(mf::ErrorCode::kIoError,
                           "cannot read " + path.string());
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty() || out == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream f(out, std::ios::binary);
  if (!f || !(f << text) || !f.flush()) {
    throw mf::MatroidError(mf::ErrorCode::kIoError, "cannot write " + out);
  }
}

// A .bm file, a graph .json file, or the name of a catalog entry.
mf::BinaryMatroid load_matroid(const std::string& spec) {
  const std::filesystem::path path(spec);
  std::error_code ec;
  if (std::filesystem::is_regular_file(path, ec)) {
    if (path.extension() == ".json") {
      nlohmann::json j;
      try {
        j = nlohmann::json::parse(slurp(path));
      } catch (const nlohmann::json::parse_error& e) {
        throw mf::MatroidError(mf::ErrorCode::kParseError,
                               spec + ": " + e.what());
      }
      return mf::catalog_entry_from_json(j, path.stem().string(), spec).matroid;
    }
    return mf::read_bm_file(path);
  }
  const auto catalog = mf::load_catalog();
  if (const mf::CatalogEntry* e = mf::find_entry(catalog, spec)) {
    return e->matroid;
  }
  throw mf::MatroidError(mf::ErrorCode::kIoError,
                         spec + " is neither a file nor a catalog entry");
}

std::string join_pairs(
    const std::vector<std::pair<std::string, std::string>>& pairs) {
  if (pairs.empty()) return "none";
  std::string s;
  for (const auto& [a, b] : pairs) {
    if (!s.empty()) s += ' ';
    s += "{" + a + "," + b + "}";
  }
  return s;
}

std::string join_labels(const mf::LabelSet& labels) {
  if (labels.empty()) return "none";
  std::string s;
  for (const std::string& l : labels) {
    if (!s.empty()) s += ' ';
    s += l;
  }
  return s;
}

std::string info_text(const mf::BinaryMatroid& m) {
  const mf::CircuitFamily cs = mf::circuits(m);
  std::string census;
  for (const auto& [size, count] : cs.census()) {
    if (!census.empty()) census += " + ";
    census += std::to_string(count) + "×" + std::to_string(size);
  }
  const mf::Classification graphic = mf::is_graphic(m);
  const mf::Classification cographic = mf::is_cographic(m);
  const mf::EulerianReport eul = mf::eulerian_report(m);
  std::ostringstream out;
  out << m.size() << " elements, rank " << m.rank();
  if (m.size() > 0) {
    out << ", circuits: " << (census.empty() ? "none" : census) << ", "
        << (graphic ? "graphic" : "not graphic") << ", "
        << (cographic ? "cographic" : "not cographic") << ", "
        << (eul.disjoint_partition ? "eulerian" : "not eulerian");
  }
  out << "\n";
  out << "labels: " << join_labels({m.labels().begin(), m.labels().end()})
      << "\n";
  out << "loops: " << join_labels(m.labels_of(mf::loops_mask(m))) << "\n";
  out << "coloops: " << join_labels(m.labels_of(mf::coloops_mask(m))) << "\n";
  out << "parallel pairs: " << join_pairs(mf::parallel_pairs(m)) << "\n";
  out << "series pairs: " << join_pairs(mf::series_pairs(m)) << "\n";
  out << "cocircuits: " << mf::cocircuits(m).size() << "\n";
  if (!graphic) out << "graphic excluded minor: " << graphic.offending << "\n";
  if (!cographic) {
    out << "cographic excluded minor: " << cographic.offending << "\n";
  }
  out << "union of circuits: " << (eul.union_of_circuits ? "yes" : "no")
      << "; disjoint circuit partition: "
      << (eul.disjoint_partition ? "yes" : "no") << "\n";
  return out.str();
}

struct ReportFlags {
  std::string format = "json";
  std::string out;
  bool timing = false;
};

void add_report_flags(CLI::App* cmd, ReportFlags& flags) {
  cmd->add_option("--format", flags.format, "Report format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  cmd->add_option("--out", flags.out, "Write the report here instead of stdout");
  cmd->add_flag("--timing", flags.timing,
                "Include wall_time (the report is then not byte-stable)");
}

int finish(mf::VerificationReport report, const ReportFlags& flags,
           std::chrono::steady_clock::time_point start) {
  if (flags.timing) {
    report.set_wall_time(std::chrono::duration<double>(
                             std::chrono::steady_clock::now() - start)
                             .count());
  }
  emit(flags.format == "text" ? report.to_text() : report.to_json_text(),
       flags.out);
  std::cerr << "matroidforge: " << report.campaign() << " " << report.verdict()
            << " (" << report.passed() << "/" << report.checked() << ")\n";
  return mf::exit_code_for(report);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Binary matroids over GF(2): splitting, minors, verification"};
  app.require_subcommand(1);
  bool quiet = false;
  app.add_flag("-q,--quiet", quiet, "Suppress progress output");

  std::string info_input;
  auto* info = app.add_subcommand("info", "Summarize a matroid or graph");
  info->add_option("input", info_input, ".bm file, graph .json, or catalog name")
      ->required();

  std::string split_input, split_x, split_y, split_out, split_label;
  bool split_element = false;
  auto* split_cmd =
      app.add_subcommand("split", "Write M_{x,y} or, with --element, M'_{x,y}");
  split_cmd->add_option("input", split_input)->required();
  split_cmd->add_option("x", split_x)->required();
  split_cmd->add_option("y", split_y)->required();
  split_cmd->add_flag("--element", split_element,
                      "Element splitting: also add the new element");
  split_cmd->add_option("--label", split_label,
                        "Label of the new element (default a, a1, ...)");
  split_cmd->add_option("--out", split_out, "Output .bm file (default stdout)");

  ReportFlags lemma_flags;
  std::size_t lemma_vertices = 5, lemma_jobs = 1;
  bool lemma_mutant = false;
  auto* lemmas = app.add_subcommand(
      "verify-lemmas", "Check the element-splitting properties on a corpus");
  lemmas->add_option("--max-vertices", lemma_vertices)->capture_default_str();
  lemmas->add_option("--jobs", lemma_jobs)->capture_default_str();
  lemmas->add_flag("--inject-mutant", lemma_mutant)->group("");
  add_report_flags(lemmas, lemma_flags);

  ReportFlags minimal_flags;
  std::string catalog_dir;
  auto* minimal = app.add_subcommand(
      "verify-minimal", "Check the catalog's claimed minimal matroids");
  minimal->add_option("--catalog", catalog_dir,
                      "Catalog directory (default $MATROIDFORGE_CATALOG or "
                      "the bundled catalog)");
  add_report_flags(minimal, minimal_flags);

  ReportFlags theorem_flags;
  mf::TheoremCampaignOptions theorem_options;
  auto* theorem = app.add_subcommand(
      "verify-theorem",
      "Exhaustively check: all splittings cographic iff no M(K4) minor");
  theorem->add_option("--max-vertices", theorem_options.caps.max_vertices)
      ->capture_default_str();
  theorem->add_option("--max-edges", theorem_options.caps.max_edges)
      ->capture_default_str();
  theorem->add_option("--max-multiplicity",
                      theorem_options.caps.max_multiplicity)
      ->capture_default_str();
  theorem->add_option("--jobs", theorem_options.jobs)->capture_default_str();
  add_report_flags(theorem, theorem_flags);

  std::string report_input;
  ReportFlags report_flags;
  auto* report_cmd =
      app.add_subcommand("report", "Re-serialize a saved JSON report");
  report_cmd->add_option("input", report_input)->required();
  report_cmd->add_option("--format", report_flags.format)
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  report_cmd->add_option("--out", report_flags.out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitPass : kExitUsage;
  }

  mf::ProgressFn progress;
  if (!quiet) {
    progress = [](const std::string& line) {
      std::cerr << "matroidforge: " << line << "\n";
    };
  }
  const auto start = std::chrono::steady_clock::now();

  try {
    if (*info) {
      std::cout << info_text(load_matroid(info_input));
      return kExitPass;
    }
    if (*split_cmd) {
      const mf::BinaryMatroid m = load_matroid(split_input);
      mf::BinaryMatroid result =
          split_element
              ? mf::element_split(m, mf::LabelSet{split_x, split_y},
                                  split_label.empty()
                                      ? std::optional<std::string>()
                                      : std::optional<std::string>(split_label))
              : mf::split(m, split_x, split_y);
      if (split_out.empty()) {
        std::cout << mf::format_bm(result);
      } else {
        mf::write_bm_file(split_out, result);
      }
      const long delta = static_cast<long>(result.rank()) -
                         static_cast<long>(m.rank());
      (split_out.empty() ? std::cerr : std::cout)
          << "rank delta " << (delta >= 0 ? "+" : "") << delta << "\n";
      return kExitPass;
    }
    if (*lemmas) {
      mf::LemmaCampaignOptions options;
      options.max_vertices = lemma_vertices;
      options.jobs = lemma_jobs;
      options.inject_mutant = lemma_mutant;
      options.progress = progress;
      if (lemma_vertices > mf::kMaxEnumerationVertices) {
        throw mf::MatroidError(mf::ErrorCode::kCapExceeded,
                               "--max-vertices is limited to 7");
      }
      return finish(mf::verify_lemmas(options), lemma_flags, start);
    }
    if (*minimal) {
      const auto dir =
          catalog_dir.empty() ? mf::default_catalog_dir()
                              : std::filesystem::path(catalog_dir);
      return finish(mf::verify_minimal_catalog(
                        mf::load_catalog(dir, /*strict=*/false), progress),
                    minimal_flags, start);
    }
    if (*theorem) {
      theorem_options.progress = progress;
      return finish(mf::verify_main_theorem(theorem_options), theorem_flags,
                    start);
    }
    if (*report_cmd) {
      nlohmann::json j;
      try {
        j = nlohmann::json::parse(slurp(report_input));
      } catch (const nlohmann::json::parse_error& e) {
        throw mf::MatroidError(mf::ErrorCode::kParseError,
                               report_input + ": " + e.what());
      }
      const mf::VerificationReport r = mf::VerificationReport::from_json(j);
      emit(report_flags.format == "text" ? r.to_text() : r.to_json_text(),
           report_flags.out);
      return mf::exit_code_for(r);
    }
  } catch (const mf::MatroidError& e) {
    std::cerr << "matroidforge: " << e.what() << "\n";
    return exit_code_for_error(e.code());
  } catch (const std::exception& e) {
    std::cerr << "matroidforge: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
