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

#include "matroidforge/gf2_matrix.h"

#include <algorithm>
#include <array>
#include <bit>
#include <utility>

#include "matroidforge/error.h"

namespace matroidforge {
namespace {

void check_cols(std::size_t cols) {
  if (cols > kMaxElements) {
    throw MatroidError(ErrorCode::kGroundSetTooLarge,
                       "matrix has " + std::to_string(cols) +
                           " columns; the limit is 64");
  }
}

void check_index(std::size_t i, std::size_t bound, const char* what) {
  if (i >= bound) {
    throw MatroidError(ErrorCode::kInvalidArgument,
                       std::string(what) + " index " + std::to_string(i) +
                           " out of range " + std::to_string(bound));
  }
}

}  // namespace


GF2Matrix::GF2Matrix(std::size_t rows, std::size_t cols)
    : cols_(cols), rows_(rows, 0) {
  check_cols(cols);
}

GF2Matrix GF2Matrix::from_rows(std::size_t cols, std::vector<Word> rows) {
  check_cols(cols);
  for (Word r : rows) {
    if ((r & ~low_mask(cols)) != 0) {
      throw MatroidError(ErrorCode::kInvalidArgument,
                         "row has bits beyond column count");
    }
  }
  GF2Matrix m;
  m.cols_ = cols;
  m.rows_ = std::move(rows);
  return m;
}

GF2Matrix GF2Matrix::from_strings(const std::vector<std::string>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  std::vector<Word> words;
  words.reserve(rows.size());
  for (const std::string& s : rows) {
    if (s.size() != cols) {
      throw MatroidError(ErrorCode::kInvalidArgument, "ragged matrix rows");
    }
    Word w = 0;
    for (std::size_t c = 0; c < cols; ++c) {
      if (s[c] == '1') {
        w |= bit(c);
      } else if (s[c] != '0') {
        throw MatroidError(ErrorCode::kInvalidArgument,
                           "matrix entries must be 0 or 1");
      }
    }
    words.push_back(w);
  }
  return from_rows(cols, std::move(words));
}

GF2Matrix GF2Matrix::identity(std::size_t n) {
  GF2Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.rows_[i] = bit(i);
  return m;
}

bool GF2Matrix::at(std::size_t r, std::size_t c) const {
  check_index(r, rows(), "row");
  check_index(c, cols_, "column");
  return contains(rows_[r], c);
}

Word GF2Matrix::row(std::size_t r) const {
  check_index(r, rows(), "row");
  return rows_[r];
}

Word GF2Matrix::column(std::size_t c) const {
  check_index(c, cols_, "column");
  if (rows() > 64) {
    throw MatroidError(ErrorCode::kInvalidArgument,
                       "column() needs at most 64 rows");
  }
  Word out = 0;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (contains(rows_[r], c)) out |= bit(r);
  }
  return out;
}

GF2Matrix GF2Matrix::with_bit(std::size_t r, std::size_t c, bool value) const {
  check_index(r, rows(), "row");
  check_index(c, cols_, "column");
  GF2Matrix out = *this;
  if (value) {
    out.rows_[r] |= bit(c);
  } else {
    out.rows_[r] &= ~bit(c);
  }
  return out;
}

GF2Matrix GF2Matrix::with_row(Word row) const {
  if ((row & ~low_mask(cols_)) != 0) {
    throw MatroidError(ErrorCode::kInvalidArgument,
                       "row has bits beyond column count");
  }
  GF2Matrix out = *this;
  out.rows_.push_back(row);
  return out;
}

GF2Matrix GF2Matrix::with_column(Word column) const {
  check_cols(cols_ + 1);
  if (rows() < 64 && (column >> rows()) != 0) {
    throw MatroidError(ErrorCode::kInvalidArgument,
                       "column has bits beyond row count");
  }
  GF2Matrix out = *this;
  out.cols_ = cols_ + 1;
  for (std::size_t r = 0; r < out.rows_.size(); ++r) {
    if (r < 64 && contains(column, r)) out.rows_[r] |= bit(cols_);
  }
  return out;
}

GF2Matrix GF2Matrix::select_columns(ElementMask keep) const {
  keep &= low_mask(cols_);
  const std::vector<std::size_t> kept = indices_of(keep);
  GF2Matrix out(rows(), kept.size());
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    Word w = 0;
    for (std::size_t j = 0; j < kept.size(); ++j) {
      if (contains(rows_[r], kept[j])) w |= bit(j);
    }
    out.rows_[r] = w;
  }
  return out;
}

GF2Matrix GF2Matrix::without_zero_rows() const {
  GF2Matrix out;
  out.cols_ = cols_;
  for (Word r : rows_) {
    if (r != 0) out.rows_.push_back(r);
  }
  return out;
}

GF2Matrix GF2Matrix::transposed() const {
  check_cols(rows());
  GF2Matrix out(cols_, rows());
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (contains(rows_[r], c)) out.rows_[c] |= bit(r);
    }
  }
  return out;
}

std::vector<std::string> GF2Matrix::to_strings() const {
  std::vector<std::string> out;
  out.reserve(rows_.size());
  for (Word r : rows_) {
    std::string s(cols_, '0');
    for (std::size_t c = 0; c < cols_; ++c) {
      if (contains(r, c)) s[c] = '1';
    }
    out.push_back(std::move(s));
  }
  return out;
}

std::size_t rank(const GF2Matrix& m) {
  return rank_of_columns(m, low_mask(m.cols()));
}

// XOR basis keyed by lowest set bit; each inserted row either extends the
// basis or reduces to zero.
std::size_t rank_of_columns(const GF2Matrix& m, ElementMask subset) {
  std::array<Word, 64> basis{};
  std::size_t r = 0;
  for (Word w : m.row_words()) {
    w &= subset;
    while (w != 0) {
      const int low = std::countr_zero(w);
      if (basis[low] == 0) {
        basis[low] = w;
        ++r;
        break;
      }
      w ^= basis[low];
    }
  }
  return r;
}

RowEchelon row_reduce(const GF2Matrix& m) {
  std::vector<Word> rows(m.row_words().begin(), m.row_words().end());
  std::vector<std::size_t> pivots;
  std::size_t next = 0;
  for (std::size_t c = 0; c < m.cols() && next < rows.size(); ++c) {
    std::size_t found = next;
    while (found < rows.size() && !contains(rows[found], c)) ++found;
    if (found == rows.size()) continue;
    std::swap(rows[next], rows[found]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != next && contains(rows[r], c)) rows[r] ^= rows[next];
    }
    pivots.push_back(c);
    ++next;
  }
  return {GF2Matrix::from_rows(m.cols(), std::move(rows)), std::move(pivots)};
}

std::optional<ElementMask> column_dependency(const GF2Matrix& m,
                                             ElementMask subset) {
  if ((subset & ~low_mask(m.cols())) != 0) {
    throw MatroidError(ErrorCode::kInvalidArgument,
                       "column subset out of range");
  }
  const RowEchelon e = row_reduce(m.select_columns(subset));
  const std::vector<std::size_t> cols = indices_of(subset);
  if (e.pivots.size() == cols.size()) return std::nullopt;
  // First free column plus the pivot columns it depends on.
  std::size_t free_col = 0;
  for (std::size_t k = 0; k <= e.pivots.size(); ++k) {
    if (k == e.pivots.size() || e.pivots[k] != k) {
      free_col = k;
      break;
    }
  }
  ElementMask combo = bit(cols[free_col]);
  for (std::size_t i = 0; i < e.pivots.size(); ++i) {
    if (e.matrix.at(i, free_col)) combo |= bit(cols[e.pivots[i]]);
  }
  return combo;
}

}  // namespace matroidforge
