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

#ifndef DELTATWIST_POLYNOMIAL_H_
#define DELTATWIST_POLYNOMIAL_H_

#include <cstdint>
#include <initializer_list>
#include <map>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "deltatwist/int_matrix.h"

namespace deltatwist {

// Always stored in lowest terms with a positive denominator.
using Rational = boost::multiprecision::cpp_rational;

// Univariate polynomial in z with arbitrary-precision integer coefficients.
// coefficients()[k] is the coefficient of z^k; there is never a trailing
// zero, so the zero polynomial has no coefficients at all.
class IntPoly {
 public:
  IntPoly() = default;
  IntPoly(long long constant);  // NOLINT(google-explicit-constructor)
  explicit IntPoly(const BigInt& constant);
  explicit IntPoly(std::vector<BigInt> coefficients);
  IntPoly(std::initializer_list<long long> coefficients);

  static IntPoly Monomial(const BigInt& coefficient, int degree);
  // The polynomial z.
  static IntPoly Z() { return Monomial(BigInt(1), 1); }

  const std::vector<BigInt>& coefficients() const { return coeffs_; }
  bool IsZero() const { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  BigInt Coefficient(int k) const;
  const BigInt& LeadingCoefficient() const;

  IntPoly& operator+=(const IntPoly& other);
  IntPoly& operator-=(const IntPoly& other);
  IntPoly& operator*=(const IntPoly& other);
  IntPoly& operator*=(const BigInt& scalar);

  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(IntPoly a);
  friend bool operator==(const IntPoly&, const IntPoly&) = default;

  // Decreasing degree, "c*z^k" / "c*z" / "c", joined by " + " or " - ";
  // the zero polynomial is "0". Example: "8*z^4 + 8*z^2".
  std::string ToString() const;
  // JSON array of decimal coefficient strings in ascending degree.
  std::string ToJson() const;

 private:
  void Canonicalize();

  std::vector<BigInt> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const IntPoly& p);

// s with p = q * s over the integers. Throws kDivisionByZeroPoly for q = 0
// and kNonzeroRemainder when q does not divide p in Z[z].
IntPoly ExactDiv(const IntPoly& p, const IntPoly& q);

// Exact Horner evaluation.
Rational EvalRational(const IntPoly& p, const Rational& at);

// sum over widths w of counts[w] * z^w.
IntPoly FromWidthHistogram(const std::map<int, BigInt>& counts);
// Same, with counts[w] at index w.
IntPoly FromWidthHistogram(std::span<const std::uint64_t> counts);

}  // namespace deltatwist

#endif  // DELTATWIST_POLYNOMIAL_H_
