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

#include "deltatwist/gf2.h"

#include <algorithm>
#include <array>
#include <bit>
#include <string>
#include <utility>

namespace deltatwist {
namespace {

constexpr std::size_t kWordBits = 64;

std::size_t WordsFor(std::size_t bits) {
  return (bits + kWordBits - 1) / kWordBits;
}

}  // namespace

Gf2Matrix::Gf2Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows),
      cols_(cols),
      words_per_row_(WordsFor(cols)),
      words_(rows * WordsFor(cols), 0) {}

Gf2Matrix Gf2Matrix::FromRows(const std::vector<std::vector<int>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Gf2Matrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) {
      throw Error(ErrorCode::kDimensionMismatch, "ragged row " +
                                                     std::to_string(i));
    }
    for (std::size_t j = 0; j < cols; ++j) {
      m.Set(i, j, Gf2((rows[i][j] & 1) != 0));
    }
  }
  return m;
}

Gf2Matrix Gf2Matrix::Identity(std::size_t n) {
  Gf2Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.Set(i, i, Gf2::One());
  return m;
}

void Gf2Matrix::CheckIndex(std::size_t i, std::size_t j) const {
  if (i >= rows_ || j >= cols_) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "entry (" + std::to_string(i) + ", " + std::to_string(j) +
                    ") outside " + std::to_string(rows_) + "x" +
                    std::to_string(cols_));
  }
}

Gf2 Gf2Matrix::Get(std::size_t i, std::size_t j) const {
  CheckIndex(i, j);
  const std::uint64_t word = words_[i * words_per_row_ + j / kWordBits];
  return Gf2(((word >> (j % kWordBits)) & 1) != 0);
}

void Gf2Matrix::Set(std::size_t i, std::size_t j, Gf2 value) {
  CheckIndex(i, j);
  std::uint64_t& word = words_[i * words_per_row_ + j / kWordBits];
  const std::uint64_t bit = std::uint64_t{1} << (j % kWordBits);
  if (value.bit) {
    word |= bit;
  } else {
    word &= ~bit;
  }
}

std::vector<std::vector<int>> Gf2Matrix::ToRows() const {
  std::vector<std::vector<int>> out(rows_, std::vector<int>(cols_, 0));
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out[i][j] = Get(i, j).bit ? 1 : 0;
  }
  return out;
}

int Rank(const Gf2Matrix& m) {
  std::vector<std::uint64_t> w = m.words_;
  const std::size_t stride = m.words_per_row_;
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < m.cols_ && pivot_row < m.rows_; ++col) {
    const std::size_t wi = col / kWordBits;
    const std::uint64_t bit = std::uint64_t{1} << (col % kWordBits);
    std::size_t found = pivot_row;
    while (found < m.rows_ && (w[found * stride + wi] & bit) == 0) ++found;
    if (found == m.rows_) continue;
    if (found != pivot_row) {
      std::swap_ranges(w.begin() + found * stride,
                       w.begin() + (found + 1) * stride,
                       w.begin() + pivot_row * stride);
    }
    for (std::size_t r = pivot_row + 1; r < m.rows_; ++r) {
      if (w[r * stride + wi] & bit) {
        // Words below wi are already zero in the pivot row.
        for (std::size_t k = wi; k < stride; ++k) {
          w[r * stride + k] ^= w[pivot_row * stride + k];
        }
      }
    }
    ++pivot_row;
  }
  return static_cast<int>(pivot_row);
}

Gf2 Determinant(const Gf2Matrix& m) {
  if (!m.square()) {
    throw Error(ErrorCode::kDimensionMismatch, "determinant of non-square matrix");
  }
  return Gf2(Rank(m) == static_cast<int>(m.rows()));
}

Gf2SymMatrix::Gf2SymMatrix(std::size_t order) : m_(order, order) {}

Gf2SymMatrix Gf2SymMatrix::FromRows(const std::vector<std::vector<int>>& rows) {
  const std::size_t n = rows.size();
  Gf2SymMatrix s(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) {
      throw Error(ErrorCode::kDimensionMismatch, "symmetric matrix must be square");
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const bool a = (rows[i][j] & 1) != 0;
      const bool b = (rows[j][i] & 1) != 0;
      if (a != b) {
        throw Error(ErrorCode::kPreconditionViolated,
                    "matrix is not symmetric at (" + std::to_string(i) + ", " +
                        std::to_string(j) + ")");
      }
      s.Set(i, j, a);
    }
  }
  return s;
}

Gf2SymMatrix Gf2SymMatrix::Identity(std::size_t n) {
  Gf2SymMatrix s(n);
  for (std::size_t i = 0; i < n; ++i) s.Set(i, i, true);
  return s;
}

void Gf2SymMatrix::Set(std::size_t i, std::size_t j, bool value) {
  m_.Set(i, j, Gf2(value));
  m_.Set(j, i, Gf2(value));
}

std::uint64_t Gf2SymMatrix::RowMask(std::size_t i) const {
  if (order() > kWordBits) {
    throw Error(ErrorCode::kTooLarge, "row masks need order <= 64");
  }
  std::uint64_t mask = 0;
  for (std::size_t j = 0; j < order(); ++j) {
    if (Get(i, j)) mask |= std::uint64_t{1} << j;
  }
  return mask;
}

std::vector<std::uint64_t> Gf2SymMatrix::RowMasks() const {
  std::vector<std::uint64_t> rows(order());
  for (std::size_t i = 0; i < order(); ++i) rows[i] = RowMask(i);
  return rows;
}

Gf2SymMatrix PrincipalSubmatrix(const Gf2SymMatrix& m,
                                std::span<const std::size_t> indices) {
  std::vector<std::size_t> sorted(indices.begin(), indices.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error(ErrorCode::kPreconditionViolated, "repeated index in subset");
  }
  if (!sorted.empty() && sorted.back() >= m.order()) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "index " + std::to_string(sorted.back()) + " outside order " +
                    std::to_string(m.order()));
  }
  Gf2SymMatrix sub(sorted.size());
  for (std::size_t a = 0; a < sorted.size(); ++a) {
    for (std::size_t b = a; b < sorted.size(); ++b) {
      sub.Set(a, b, m.Get(sorted[a], sorted[b]));
    }
  }
  return sub;
}

Gf2SymMatrix PrincipalSubmatrix(const Gf2SymMatrix& m, std::uint64_t mask) {
  std::vector<std::size_t> indices;
  for (std::uint64_t rest = mask; rest != 0; rest &= rest - 1) {
    indices.push_back(static_cast<std::size_t>(std::countr_zero(rest)));
  }
  return PrincipalSubmatrix(m, indices);
}

int Rank(const Gf2SymMatrix& m) { return Rank(m.matrix()); }

Gf2 Determinant(const Gf2SymMatrix& m) { return Determinant(m.matrix()); }

int MaxNonsingularPrincipalOrder(const Gf2SymMatrix& m, int limit) {
  const int n = static_cast<int>(m.order());
  if (n > limit || n > 62) {
    throw Error(ErrorCode::kTooLarge,
                "exhaustive principal-minor search over order " +
                    std::to_string(n) + " exceeds limit " +
                    std::to_string(limit));
  }
  const std::vector<std::uint64_t> rows = m.RowMasks();
  int best = 0;
  const std::uint64_t count = std::uint64_t{1} << n;
  for (std::uint64_t s = 0; s < count; ++s) {
    const int size = std::popcount(s);
    if (size > best && MaskedRank(rows, s) == size) best = size;
  }
  return best;
}

int MaskedRank(std::span<const std::uint64_t> rows, std::uint64_t mask) {
  // Basis vectors indexed by their highest set bit.
  std::array<std::uint64_t, 64> basis{};
  int rank = 0;
  for (std::uint64_t rest = mask; rest != 0; rest &= rest - 1) {
    std::uint64_t v = rows[std::countr_zero(rest)] & mask;
    while (v != 0) {
      const int top = 63 - std::countl_zero(v);
      if (basis[top] == 0) {
        basis[top] = v;
        ++rank;
        break;
      }
      v ^= basis[top];
    }
  }
  return rank;
}

}  // namespace deltatwist
