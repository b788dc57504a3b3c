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

// Almost block-diagonal matrices: two square blocks that overlap in a single
// entry. Adjacency matrices of one-point joins have exactly this shape.
//
//       [ A'   u   0  ]
//   M = [ v^T  c   x^T]      A = [A' u; v^T c],   B = [c x^T; y B']
//       [ 0    y   B' ]
//
// For any field, det M = det A det B' + det A' det B - c det A' det B'.

#ifndef DELTATWIST_JOIN_BLOCKS_H_
#define DELTATWIST_JOIN_BLOCKS_H_

#include <cstddef>
#include <string>
#include <vector>

#include "deltatwist/error.h"
#include "deltatwist/gf2.h"
#include "deltatwist/int_matrix.h"

namespace deltatwist {

template <typename Matrix>
struct JoinBlocks {
  using Scalar = typename Matrix::Scalar;

  Matrix a_prime;         // n x n
  std::vector<Scalar> u;  // column above c
  std::vector<Scalar> v;  // row left of c
  Scalar c{};
  std::vector<Scalar> x;  // row right of c
  std::vector<Scalar> y;  // column below c
  Matrix b_prime;         // m x m

  std::size_t n() const { return a_prime.rows(); }
  std::size_t m() const { return b_prime.rows(); }
};

template <typename Scalar>
struct DetIdentityCheck {
  Scalar lhs;
  Scalar rhs;
  bool holds = false;
};

namespace internal {

template <typename Matrix>
void ValidateJoinBlocks(const JoinBlocks<Matrix>& blocks) {
  const std::size_t n = blocks.n();
  const std::size_t m = blocks.m();
  if (!blocks.a_prime.square() || !blocks.b_prime.square() ||
      blocks.u.size() != n || blocks.v.size() != n || blocks.x.size() != m ||
      blocks.y.size() != m) {
    throw Error(ErrorCode::kDimensionMismatch,
                "join blocks need square A' (n=" + std::to_string(n) +
                    "), square B' (m=" + std::to_string(m) +
                    "), |u|=|v|=n and |x|=|y|=m");
  }
}

// [A' u; v^T c]
template <typename Matrix>
Matrix BorderedLeft(const JoinBlocks<Matrix>& blocks) {
  const std::size_t n = blocks.n();
  Matrix a(n + 1, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a.Set(i, j, blocks.a_prime.Get(i, j));
    a.Set(i, n, blocks.u[i]);
    a.Set(n, i, blocks.v[i]);
  }
  a.Set(n, n, blocks.c);
  return a;
}

// [c x^T; y B']
template <typename Matrix>
Matrix BorderedRight(const JoinBlocks<Matrix>& blocks) {
  const std::size_t m = blocks.m();
  Matrix b(m + 1, m + 1);
  b.Set(0, 0, blocks.c);
  for (std::size_t i = 0; i < m; ++i) {
    b.Set(0, i + 1, blocks.x[i]);
    b.Set(i + 1, 0, blocks.y[i]);
    for (std::size_t j = 0; j < m; ++j) {
      b.Set(i + 1, j + 1, blocks.b_prime.Get(i, j));
    }
  }
  return b;
}

}  // namespace internal

// The (n+m+1)-square matrix M described above.
template <typename Matrix>
Matrix AssembleJoin(const JoinBlocks<Matrix>& blocks) {
  internal::ValidateJoinBlocks(blocks);
  const std::size_t n = blocks.n();
  const std::size_t m = blocks.m();
  Matrix out(n + m + 1, n + m + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out.Set(i, j, blocks.a_prime.Get(i, j));
    out.Set(i, n, blocks.u[i]);
    out.Set(n, i, blocks.v[i]);
  }
  out.Set(n, n, blocks.c);
  for (std::size_t i = 0; i < m; ++i) {
    out.Set(n, n + 1 + i, blocks.x[i]);
    out.Set(n + 1 + i, n, blocks.y[i]);
    for (std::size_t j = 0; j < m; ++j) {
      out.Set(n + 1 + i, n + 1 + j, blocks.b_prime.Get(i, j));
    }
  }
  return out;
}

// Evaluates both sides of the determinant identity in the scalar domain of
// `Matrix` (GF(2) for Gf2Matrix, exact integers for IntMatrix).
template <typename Matrix>
DetIdentityCheck<typename Matrix::Scalar> CheckDetIdentity(
    const JoinBlocks<Matrix>& blocks) {
  internal::ValidateJoinBlocks(blocks);
  using Scalar = typename Matrix::Scalar;
  const Scalar det_m = Determinant(AssembleJoin(blocks));
  const Scalar det_a = Determinant(internal::BorderedLeft(blocks));
  const Scalar det_b = Determinant(internal::BorderedRight(blocks));
  const Scalar det_a_prime = Determinant(blocks.a_prime);
  const Scalar det_b_prime = Determinant(blocks.b_prime);
  Scalar rhs = det_a * det_b_prime + det_a_prime * det_b -
               blocks.c * det_a_prime * det_b_prime;
  DetIdentityCheck<Scalar> result{det_m, rhs, false};
  result.holds = (result.lhs == result.rhs);
  return result;
}

using Gf2JoinBlocks = JoinBlocks<Gf2Matrix>;
using IntJoinBlocks = JoinBlocks<IntMatrix>;

}  // namespace deltatwist

#endif  // DELTATWIST_JOIN_BLOCKS_H_
