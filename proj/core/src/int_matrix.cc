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

#include "deltatwist/int_matrix.h"

#include <string>
#include <utility>

#include "deltatwist/error.h"

namespace deltatwist {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

IntMatrix IntMatrix::FromRows(const std::vector<std::vector<long long>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) {
      throw Error(ErrorCode::kDimensionMismatch, "ragged row " + std::to_string(i));
    }
    for (std::size_t j = 0; j < cols; ++j) m.Set(i, j, BigInt(rows[i][j]));
  }
  return m;
}

IntMatrix IntMatrix::Identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.Set(i, i, BigInt(1));
  return m;
}

void IntMatrix::CheckIndex(std::size_t i, std::size_t j) const {
  if (i >= rows_ || j >= cols_) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "entry (" + std::to_string(i) + ", " + std::to_string(j) +
                    ") outside " + std::to_string(rows_) + "x" +
                    std::to_string(cols_));
  }
}

const BigInt& IntMatrix::Get(std::size_t i, std::size_t j) const {
  CheckIndex(i, j);
  return entries_[i * cols_ + j];
}

void IntMatrix::Set(std::size_t i, std::size_t j, BigInt value) {
  CheckIndex(i, j);
  entries_[i * cols_ + j] = std::move(value);
}

BigInt Determinant(const IntMatrix& m) {
  if (!m.square()) {
    throw Error(ErrorCode::kDimensionMismatch, "determinant of non-square matrix");
  }
  const std::size_t n = m.rows();
  if (n == 0) return BigInt(1);

  std::vector<std::vector<BigInt>> a(n, std::vector<BigInt>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m.Get(i, j);
  }

  int sign = 1;
  BigInt previous_pivot = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && a[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return BigInt(0);
      std::swap(a[k], a[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        // Sylvester's identity guarantees this quotient is an integer.
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / previous_pivot;
      }
      a[i][k] = 0;
    }
    previous_pivot = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

}  // namespace deltatwist
