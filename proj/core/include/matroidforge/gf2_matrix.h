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

#ifndef MATROIDFORGE_GF2_MATRIX_H_
#define MATROIDFORGE_GF2_MATRIX_H_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "matroidforge/element_mask.h"

namespace matroidforge {

// Dense matrix over GF(2), one word per row. Column c of row r is bit c of
// rows()[r], so at most 64 columns. Values are immutable: every operation
// returns a new matrix.
class GF2Matrix {
 public:
  GF2Matrix() = default;
  GF2Matrix(std::size_t rows, std::size_t cols);

  // Bits above `cols` in any row are rejected.
  static GF2Matrix from_rows(std::size_t cols, std::vector<Word> rows);
  // Each string is one row of '0'/'1' characters; all must have equal length.
  static GF2Matrix from_strings(const std::vector<std::string>& rows);
  static GF2Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_.empty() || cols_ == 0; }

  bool at(std::size_t r, std::size_t c) const;
  Word row(std::size_t r) const;
  std::span<const Word> row_words() const { return rows_; }

  // Column c as a bit vector over rows. Requires rows() <= 64.
  Word column(std::size_t c) const;

  GF2Matrix with_bit(std::size_t r, std::size_t c, bool value) const;
  GF2Matrix with_row(Word row) const;
  // Appends a column whose entries are the bits of `column` (bit r = row r).
  GF2Matrix with_column(Word column) const;
  // Keeps the columns in `keep`, packing them to the left in index order.
  GF2Matrix select_columns(ElementMask keep) const;
  GF2Matrix without_zero_rows() const;
  GF2Matrix transposed() const;

  std::vector<std::string> to_strings() const;

  friend bool operator==(const GF2Matrix&, const GF2Matrix&) = default;

 private:
  std::size_t cols_ = 0;
  std::vector<Word> rows_;
};

struct RowEchelon {
  GF2Matrix matrix;                 // reduced row-echelon form, same shape
  std::vector<std::size_t> pivots;  // strictly increasing pivot columns
};

std::size_t rank(const GF2Matrix& m);

// Rank of the submatrix formed by the columns in `subset`.
std::size_t rank_of_columns(const GF2Matrix& m, ElementMask subset);

RowEchelon row_reduce(const GF2Matrix& m);

// A nonempty set of columns inside `subset` that sums to zero, or nullopt when
// the selected columns are linearly independent.
std::optional<ElementMask> column_dependency(const GF2Matrix& m,
                                             ElementMask subset);

}  // namespace matroidforge

#endif  // MATROIDFORGE_GF2_MATRIX_H_
