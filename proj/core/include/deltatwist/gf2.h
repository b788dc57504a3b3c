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

// Linear algebra over the two-element field. Rows are packed into 64-bit
// words; rank and determinant run bit-parallel Gaussian elimination on a
// private copy, so every matrix value can be shared freely between threads.

#ifndef DELTATWIST_GF2_H_
#define DELTATWIST_GF2_H_

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <span>
#include <vector>

#include "deltatwist/error.h"

namespace deltatwist {

// An element of GF(2). Arithmetic is mod 2, so subtraction equals addition.
struct Gf2 {
  bool bit = false;

  constexpr Gf2() = default;
  constexpr explicit Gf2(bool b) : bit(b) {}

  static constexpr Gf2 Zero() { return Gf2(false); }
  static constexpr Gf2 One() { return Gf2(true); }

  friend constexpr Gf2 operator+(Gf2 a, Gf2 b) { return Gf2(a.bit != b.bit); }
  friend constexpr Gf2 operator-(Gf2 a, Gf2 b) { return Gf2(a.bit != b.bit); }
  friend constexpr Gf2 operator*(Gf2 a, Gf2 b) { return Gf2(a.bit && b.bit); }
  friend constexpr bool operator==(Gf2 a, Gf2 b) = default;
  friend std::ostream& operator<<(std::ostream& os, Gf2 x) {
    return os << (x.bit ? 1 : 0);
  }
};

// Dense rectangular matrix over GF(2).
class Gf2Matrix {
 public:
  using Scalar = Gf2;

  Gf2Matrix() = default;
  Gf2Matrix(std::size_t rows, std::size_t cols);

  // Entries are read as (value & 1); all rows must have equal length.
  static Gf2Matrix FromRows(const std::vector<std::vector<int>>& rows);
  static Gf2Matrix Identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Gf2 Get(std::size_t i, std::size_t j) const;
  void Set(std::size_t i, std::size_t j, Gf2 value);

  std::vector<std::vector<int>> ToRows() const;

  friend bool operator==(const Gf2Matrix&, const Gf2Matrix&) = default;

 private:
  friend int Rank(const Gf2Matrix& m);

  void CheckIndex(std::size_t i, std::size_t j) const;

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t words_per_row_ = 0;
  std::vector<std::uint64_t> words_;
};

int Rank(const Gf2Matrix& m);
// The 0x0 matrix has determinant 1. Throws kDimensionMismatch if not square.
Gf2 Determinant(const Gf2Matrix& m);

// Symmetric matrix over GF(2): the adjacency matrix of a looped simple graph.
// Setting (i, j) also sets (j, i), so symmetry cannot be broken.
class Gf2SymMatrix {
 public:
  Gf2SymMatrix() = default;
  explicit Gf2SymMatrix(std::size_t order);

  // Throws kDimensionMismatch for non-square input and kPreconditionViolated
  // for asymmetric input.
  static Gf2SymMatrix FromRows(const std::vector<std::vector<int>>& rows);
  static Gf2SymMatrix Identity(std::size_t n);

  std::size_t order() const { return m_.rows(); }
  bool Get(std::size_t i, std::size_t j) const { return m_.Get(i, j).bit; }
  void Set(std::size_t i, std::size_t j, bool value);

  const Gf2Matrix& matrix() const { return m_; }
  std::vector<std::vector<int>> ToRows() const { return m_.ToRows(); }

  // Row i as a bitmask over column indices. Requires order() <= 64.
  std::uint64_t RowMask(std::size_t i) const;
  std::vector<std::uint64_t> RowMasks() const;

  friend bool operator==(const Gf2SymMatrix&, const Gf2SymMatrix&) = default;

 private:
  Gf2Matrix m_;
};

// M[S]: rows and columns of `indices`, kept in increasing index order.
// Indices must be distinct and < order.
Gf2SymMatrix PrincipalSubmatrix(const Gf2SymMatrix& m,
                                std::span<const std::size_t> indices);
// Same, with S given as a bitmask (order <= 64).
Gf2SymMatrix PrincipalSubmatrix(const Gf2SymMatrix& m, std::uint64_t mask);

int Rank(const Gf2SymMatrix& m);
Gf2 Determinant(const Gf2SymMatrix& m);
inline bool IsNonsingular(const Gf2SymMatrix& m) {
  return Determinant(m).bit;
}

// Largest |S| with M[S] nonsingular, by trying all 2^n subsets. This is the
// brute-force oracle for Rank(); it refuses orders above `limit`.
int MaxNonsingularPrincipalOrder(const Gf2SymMatrix& m,
                                 int limit = kDefaultSetSystemLimit);

// rank M[mask] where rows[i] is row i of M as a bitmask. Only rows and
// columns inside `mask` are read. This is the inner loop of the twist
// polynomial enumeration.
int MaskedRank(std::span<const std::uint64_t> rows, std::uint64_t mask);

}  // namespace deltatwist

#endif  // DELTATWIST_GF2_H_
