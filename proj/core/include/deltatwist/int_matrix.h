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

#ifndef DELTATWIST_INT_MATRIX_H_
#define DELTATWIST_INT_MATRIX_H_

#include <cstddef>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace deltatwist {

using BigInt = boost::multiprecision::cpp_int;

// Dense matrix of exact integers.
class IntMatrix {
 public:
  using Scalar = BigInt;

  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);

  static IntMatrix FromRows(const std::vector<std::vector<long long>>& rows);
  static IntMatrix Identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  const BigInt& Get(std::size_t i, std::size_t j) const;
  void Set(std::size_t i, std::size_t j, BigInt value);

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  void CheckIndex(std::size_t i, std::size_t j) const;

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> entries_;
};

// Fraction-free (Bareiss) elimination; every division is exact. The 0x0
// matrix has determinant 1.
BigInt Determinant(const IntMatrix& m);

}  // namespace deltatwist

#endif  // DELTATWIST_INT_MATRIX_H_
