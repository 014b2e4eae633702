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

#include "matroidforge/matroid_io.h"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "matroidforge/error.h"

namespace matroidforge {
namespace {

[[noreturn]] void parse_error(std::string_view source, std::size_t line,
                              std::size_t column, const std::string& what) {
  throw MatroidError(ErrorCode::kParseError,
                     std::string(source) + ":" + std::to_string(line) + ":" +
                         std::to_string(column) + ": " + what);
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    start = end + 1;
  }
  return lines;
}

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

std::size_t parse_count(std::string_view source, std::size_t line,
                        const Token& tok) {
  std::size_t value = 0;
  auto [ptr, ec] =
      std::from_chars(tok.text.data(), tok.text.data() + tok.text.size(), value);
  if (ec != std::errc() || ptr != tok.text.data() + tok.text.size()) {
    parse_error(source, line, tok.column,
                "expected a nonnegative integer, got '" +
                    std::string(tok.text) + "'");
  }
  return value;
}

}  // namespace

BinaryMatroid parse_bm(std::string_view text, std::string_view source) {
  const std::vector<std::string_view> lines = split_lines(text);
  if (lines.empty()) parse_error(source, 1, 1, "missing header line");
  const std::vector<Token> header = tokenize(lines[0]);
  if (header.size() != 2) {
    parse_error(source, 1, 1, "header must be '<rows> <cols>'");
  }
  const std::size_t rows = parse_count(source, 1, header[0]);
  const std::size_t cols = parse_count(source, 1, header[1]);
  if (cols > kMaxElements) {
    parse_error(source, 1, header[1].column, "more than 64 columns");
  }
  if (lines.size() < 2) parse_error(source, 2, 1, "missing label line");
  std::vector<std::string> labels;
  for (const Token& t : tokenize(lines[1])) labels.emplace_back(t.text);
  if (labels.size() != cols) {
    parse_error(source, 2, 1,
                "expected " + std::to_string(cols) + " labels, found " +
                    std::to_string(labels.size()));
  }
  if (lines.size() < 2 + rows) {
    parse_error(source, lines.size() + 1, 1,
                "expected " + std::to_string(rows) + " matrix rows");
  }
  std::vector<Word> words;
  words.reserve(rows);
  for (std::size_t r = 0; r < rows; ++r) {
    const std::string_view line = lines[2 + r];
    const std::size_t line_no = r + 3;
    if (line.size() != cols) {
      parse_error(source, line_no, std::min(line.size(), cols) + 1,
                  "row must have exactly " + std::to_string(cols) +
                      " characters");
    }
    Word w = 0;
    for (std::size_t c = 0; c < cols; ++c) {
      if (line[c] == '1') {
        w |= bit(c);
      } else if (line[c] != '0') {
        parse_error(source, line_no, c + 1, "entries must be '0' or '1'");
      }
    }
    words.push_back(w);
  }
  for (std::size_t extra = 2 + rows; extra < lines.size(); ++extra) {
    if (!lines[extra].empty()) {
      parse_error(source, extra + 1, 1, "unexpected trailing content");
    }
  }
  try {
    return BinaryMatroid(std::move(labels),
                         GF2Matrix::from_rows(cols, std::move(words)));
  } catch (const MatroidError& e) {
    parse_error(source, 2, 1, e.what());
  }
}

BinaryMatroid read_bm_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw MatroidError(ErrorCode::kIoError, "cannot open " + path.string());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_bm(buf.str(), path.string());
}

std::string format_bm(const BinaryMatroid& m) {
  std::string out = std::to_string(m.rank()) + " " + std::to_string(m.size()) +
                    "\n";
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i > 0) out += ' ';
    out += m.labels()[i];
  }
  out += '\n';
  for (const std::string& row : m.representation().to_strings()) {
    out += row;
    out += '\n';
  }
  return out;
}

void write_bm_file(const std::filesystem::path& path, const BinaryMatroid& m) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw MatroidError(ErrorCode::kIoError, "cannot write " + path.string());
  }
  out << format_bm(m);
  if (!out) {
    throw MatroidError(ErrorCode::kIoError, "write failed: " + path.string());
  }
}

}  // namespace matroidforge
