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

#include "deltatwist/polynomial.h"

#include <algorithm>
#include <sstream>
#include <string>
#include <utility>

#include "deltatwist/error.h"

namespace deltatwist {

IntPoly::IntPoly(long long constant) : coeffs_{BigInt(constant)} {
  Canonicalize();
}

IntPoly::IntPoly(const BigInt& constant) : coeffs_{constant} { Canonicalize(); }

IntPoly::IntPoly(std::vector<BigInt> coefficients)
    : coeffs_(std::move(coefficients)) {
  Canonicalize();
}

IntPoly::IntPoly(std::initializer_list<long long> coefficients) {
  coeffs_.reserve(coefficients.size());
  for (long long c : coefficients) coeffs_.emplace_back(c);
  Canonicalize();
}

IntPoly IntPoly::Monomial(const BigInt& coefficient, int degree) {
  if (degree < 0) {
    throw Error(ErrorCode::kPreconditionViolated, "negative monomial degree");
  }
  std::vector<BigInt> c(static_cast<std::size_t>(degree) + 1);
  c.back() = coefficient;
  return IntPoly(std::move(c));
}

void IntPoly::Canonicalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt IntPoly::Coefficient(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return BigInt(0);
  return coeffs_[static_cast<std::size_t>(k)];
}

const BigInt& IntPoly::LeadingCoefficient() const {
  if (coeffs_.empty()) {
    throw Error(ErrorCode::kPreconditionViolated,
                "zero polynomial has no leading coefficient");
  }
  return coeffs_.back();
}

IntPoly& IntPoly::operator+=(const IntPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) {
    coeffs_[k] += other.coeffs_[k];
  }
  Canonicalize();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) {
    coeffs_[k] -= other.coeffs_[k];
  }
  Canonicalize();
  return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.IsZero() || b.IsZero()) return IntPoly();
  std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return IntPoly(std::move(out));
}

IntPoly& IntPoly::operator*=(const IntPoly& other) {
  *this = *this * other;
  return *this;
}

IntPoly& IntPoly::operator*=(const BigInt& scalar) {
  for (BigInt& c : coeffs_) c *= scalar;
  Canonicalize();
  return *this;
}

IntPoly operator-(IntPoly a) {
  for (BigInt& c : a.coeffs_) c = -c;
  return a;
}

std::string IntPoly::ToString() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const BigInt& c = coeffs_[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    const bool negative = c < 0;
    const BigInt magnitude = negative ? BigInt(-c) : c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    out += magnitude.str();
    if (k == 1) {
      out += "*z";
    } else if (k > 1) {
      out += "*z^" + std::to_string(k);
    }
    first = false;
  }
  return out;
}

std::string IntPoly::ToJson() const {
  std::string out = "[";
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (k > 0) out += ",";
    out += "\"" + coeffs_[k].str() + "\"";
  }
  out += "]";
  return out;
}

std::ostream& operator<<(std::ostream& os, const IntPoly& p) {
  return os << p.ToString();
}

IntPoly ExactDiv(const IntPoly& p, const IntPoly& q) {
  if (q.IsZero()) {
    throw Error(ErrorCode::kDivisionByZeroPoly, "division by the zero polynomial");
  }
  if (p.IsZero()) return IntPoly();
  if (p.degree() < q.degree()) {
    throw Error(ErrorCode::kNonzeroRemainder,
                "(" + p.ToString() + ") / (" + q.ToString() +
                    "): dividend degree below divisor degree");
  }
  std::vector<BigInt> rem = p.coefficients();
  const std::vector<BigInt>& d = q.coefficients();
  const BigInt& lead = d.back();
  const std::size_t dq = d.size() - 1;
  std::vector<BigInt> quot(rem.size() - dq);
  for (std::size_t k = rem.size(); k-- > dq;) {
    if (rem[k] == 0) continue;
    if (rem[k] % lead != 0) {
      throw Error(ErrorCode::kNonzeroRemainder,
                  "(" + p.ToString() + ") / (" + q.ToString() +
                      "): quotient is not integral");
    }
    const BigInt factor = rem[k] / lead;
    quot[k - dq] = factor;
    for (std::size_t j = 0; j <= dq; ++j) rem[k - dq + j] -= factor * d[j];
  }
  for (const BigInt& r : rem) {
    if (r != 0) {
      throw Error(ErrorCode::kNonzeroRemainder,
                  "(" + p.ToString() + ") / (" + q.ToString() +
                      ") leaves a nonzero remainder");
    }
  }
  return IntPoly(std::move(quot));
}

Rational EvalRational(const IntPoly& p, const Rational& at) {
  Rational acc = 0;
  const auto& c = p.coefficients();
  for (std::size_t k = c.size(); k-- > 0;) {
    acc = acc * at + Rational(c[k]);
  }
  return acc;
}

IntPoly FromWidthHistogram(const std::map<int, BigInt>& counts) {
  if (counts.empty()) return IntPoly();
  if (counts.begin()->first < 0) {
    throw Error(ErrorCode::kPreconditionViolated, "negative width in histogram");
  }
  std::vector<BigInt> c(static_cast<std::size_t>(counts.rbegin()->first) + 1);
  for (const auto& [width, count] : counts) {
    c[static_cast<std::size_t>(width)] += count;
  }
  return IntPoly(std::move(c));
}

IntPoly FromWidthHistogram(std::span<const std::uint64_t> counts) {
  std::vector<BigInt> c;
  c.reserve(counts.size());
  for (std::uint64_t n : counts) c.emplace_back(n);
  return IntPoly(std::move(c));
}

}  // namespace deltatwist
