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

#include "deltatwist/twist_polynomial.h"

#include <algorithm>
#include <bit>
#include <limits>
#include <string>
#include <thread>
#include <utility>

#include "deltatwist/gf2.h"

namespace deltatwist {
namespace {

IntPoly Z(int k) { return IntPoly::Monomial(BigInt(1), k); }

IntPoly Mono(long long c, int k) { return IntPoly::Monomial(BigInt(c), k); }

BigInt PowerOfTwo(int k) { return BigInt(1) << k; }

IntPoly Power(const IntPoly& p, int k) {
  IntPoly out(1);
  for (int i = 0; i < k; ++i) out *= p;
  return out;
}

int ClampThreads(int requested, std::uint64_t work) {
  int threads = std::max(1, requested);
  if (work < (std::uint64_t{1} << 12)) threads = 1;
  return threads;
}

// Splits [0, count) into `parts` contiguous ranges and runs fn(lo, hi, part).
template <typename Fn>
void ForEachRange(std::uint64_t count, int parts, Fn fn) {
  if (parts <= 1) {
    fn(std::uint64_t{0}, count, 0);
    return;
  }
  std::vector<std::thread> workers;
  workers.reserve(static_cast<std::size_t>(parts));
  for (int p = 0; p < parts; ++p) {
    const std::uint64_t lo = count * static_cast<std::uint64_t>(p) / parts;
    const std::uint64_t hi = count * static_cast<std::uint64_t>(p + 1) / parts;
    workers.emplace_back(fn, lo, hi, p);
  }
  for (auto& w : workers) w.join();
}

}  // namespace

IntPoly TwistPolynomial(const SetSystem& d, int limit) {
  if (!d.IsProper()) {
    throw Error(ErrorCode::kNotProper, "twist polynomial of an empty family");
  }
  const std::size_t n = d.ground_size();
  if (static_cast<long long>(n) > limit) {
    throw Error(ErrorCode::kTooLarge,
                "twist enumeration over " + std::to_string(n) +
                    " elements exceeds limit " + std::to_string(limit));
  }
  std::vector<std::uint64_t> histogram(2 * n + 1, 0);
  const Subset count = Subset{1} << n;
  for (Subset a = 0; a < count; ++a) {
    ++histogram[static_cast<std::size_t>(Width(Twist(d, a)))];
  }
  return FromWidthHistogram(histogram);
}

std::vector<std::uint8_t> PrincipalRankTable(const LoopedGraph& g,
                                             const RankTableOptions& options) {
  const int n = static_cast<int>(g.size());
  if (n > options.limit || n > 40) {
    throw Error(ErrorCode::kTooLarge,
                "rank table over " + std::to_string(n) +
                    " vertices exceeds limit " + std::to_string(options.limit));
  }
  const std::vector<std::uint64_t> rows = g.adjacency().RowMasks();
  const std::uint64_t count = std::uint64_t{1} << n;
  std::vector<std::uint8_t> table(count);
  ForEachRange(count, ClampThreads(options.threads, count),
               [&](std::uint64_t lo, std::uint64_t hi, int) {
                 for (std::uint64_t a = lo; a < hi; ++a) {
                   table[a] = static_cast<std::uint8_t>(MaskedRank(rows, a));
                 }
               });
  return table;
}

IntPoly TwistPolynomial(const LoopedGraph& g, const RankTableOptions& options) {
  const std::vector<std::uint8_t> rank = PrincipalRankTable(g, options);
  const std::size_t n = g.size();
  const std::uint64_t count = std::uint64_t{1} << n;
  const std::uint64_t full = count - 1;
  const int parts = ClampThreads(options.threads, count);
  std::vector<std::vector<std::uint64_t>> partial(
      static_cast<std::size_t>(parts), std::vector<std::uint64_t>(2 * n + 1, 0));
  ForEachRange(count, parts, [&](std::uint64_t lo, std::uint64_t hi, int part) {
    auto& hist = partial[static_cast<std::size_t>(part)];
    for (std::uint64_t a = lo; a < hi; ++a) ++hist[rank[a] + rank[full ^ a]];
  });
  std::vector<std::uint64_t> histogram(2 * n + 1, 0);
  for (const auto& hist : partial) {
    for (std::size_t w = 0; w < hist.size(); ++w) histogram[w] += hist[w];
  }
  return FromWidthHistogram(histogram);
}

RecursionCoefficients ComputeRecursionCoefficients(const IntPoly& t,
                                                   const IntPoly& t_plus,
                                                   const IntPoly& t_minus) {
  const IntPoly z = IntPoly::Z();
  const IntPoly z_plus_1 = z + IntPoly(1);
  const IntPoly two_z2 = Mono(2, 2);
  const IntPoly denom3{-1, -1, 2};        // 2z^2 - z - 1
  const IntPoly denom12 = denom3 * IntPoly(2);  // 2(2z^2 - z - 1)

  RecursionCoefficients q;
  q.q1 = ExactDiv(two_z2 * t_minus - z_plus_1 * t + z * t_plus, denom12);
  q.q2 = ExactDiv(two_z2 * t_minus - z_plus_1 * t_plus + z * t, denom12);
  q.q3 = ExactDiv(Z(2) * (t + t_plus) - IntPoly{0, 0, 2, 2} * t_minus, denom3);
  return q;
}

RecursionCoefficients ComputeRecursionCoefficients(const IntPoly& t,
                                                   const IntPoly& t_plus,
                                                   const IntPoly& t_minus,
                                                   bool join_vertex_looped) {
  RecursionCoefficients q = ComputeRecursionCoefficients(t, t_plus, t_minus);
  if (join_vertex_looped) std::swap(q.q1, q.q2);
  return q;
}

IntPoly ApplyRecursion(const RecursionCoefficients& q, const IntPoly& t2,
                       const IntPoly& t2_plus, const IntPoly& t2_minus) {
  return q.q1 * t2 + q.q2 * t2_plus + q.q3 * t2_minus;
}

IntPoly LoopedJoinRecursion(const JoinRecursionInput& in) {
  const IntPoly z = IntPoly::Z();
  const IntPoly neg_z_plus_1 = -(z + IntPoly(1));
  const IntPoly two_z2 = Mono(2, 2);
  const IntPoly corner = IntPoly{0, 0, -4, -4};  // -4z^2 (z+1)

  // Matrix times the G2 column.
  const IntPoly c1 = neg_z_plus_1 * in.t2 + z * in.t2_plus + two_z2 * in.t2_minus;
  const IntPoly c2 = z * in.t2 + neg_z_plus_1 * in.t2_plus + two_z2 * in.t2_minus;
  const IntPoly c3 = two_z2 * in.t2 + two_z2 * in.t2_plus + corner * in.t2_minus;
  const IntPoly form = in.t1 * c1 + in.t1_plus * c2 + in.t1_minus * c3;
  return ExactDiv(form, IntPoly{-2, -2, 4});
}

IntPoly JoinRecursion(const JoinRecursionInput& in, bool join_vertex_looped) {
  if (!join_vertex_looped) return LoopedJoinRecursion(in);
  JoinRecursionInput swapped = in;
  std::swap(swapped.t2, swapped.t2_plus);
  return LoopedJoinRecursion(swapped);
}

IntPoly UnloopedJoinRecursion(const IntPoly& t1, const IntPoly& t1_minus,
                              const IntPoly& t2, const IntPoly& t2_minus) {
  const IntPoly two_z2 = Mono(2, 2);
  const IntPoly numerator = two_z2 * t1 * t2_minus + two_z2 * t1_minus * t2 -
                            t1 * t2 - Mono(4, 2) * t1_minus * t2_minus;
  return ExactDiv(numerator, IntPoly{-2, 0, 2});
}

IntPoly UnloopedJoinRecursion(const JoinRecursionInput& in,
                              bool join_vertex_looped, bool first_side_unlooped) {
  if (!join_vertex_looped) {
    return UnloopedJoinRecursion(in.t1, in.t1_minus, in.t2, in.t2_minus);
  }
  if (first_side_unlooped) {
    return UnloopedJoinRecursion(in.t1_plus, in.t1_minus, in.t2, in.t2_minus);
  }
  return UnloopedJoinRecursion(in.t1, in.t1_minus, in.t2_plus, in.t2_minus);
}

IntPoly LeafRecursion(const IntPoly& t2, const IntPoly& t2_plus,
                      const IntPoly& t2_minus, bool leaf_looped) {
  if (leaf_looped) return IntPoly::Z() * (t2 + t2_plus);
  return t2 + Mono(2, 2) * t2_minus;
}

Rational MinusHalfDefect(const LoopedGraph& g, std::string_view v,
                         const RankTableOptions& options) {
  const std::size_t index = g.IndexOf(v);
  const Rational at(-1, 2);
  return EvalRational(TwistPolynomial(g, options), at) +
         EvalRational(TwistPolynomial(LoopComplement(g, index), options), at) -
         EvalRational(TwistPolynomial(DeleteVertex(g, index), options), at);
}

IntPoly LoopComplementFormula(const IntPoly& t_g, const IntPoly& t_g_minus) {
  return ExactDiv(IntPoly::Z() * t_g + Mono(2, 2) * t_g_minus, IntPoly{1, 1});
}

IntPoly CompleteGraphClosedForm(int n) {
  if (n < 1) throw Error(ErrorCode::kBadParams, "complete graph needs n >= 1");
  if (n % 2 == 0) {
    const BigInt c = PowerOfTwo(n - 1);
    return IntPoly::Monomial(c, n) + IntPoly::Monomial(c, n - 2);
  }
  return IntPoly::Monomial(PowerOfTwo(n), n - 1);
}

IntPoly WindmillClosedForm(int n, int m) {
  if (n < 2 || m < 1) {
    throw Error(ErrorCode::kBadParams, "windmill needs n >= 2 and m >= 1");
  }
  const BigInt scale = PowerOfTwo(m * (n - 2) + 1);
  if (n % 2 == 0) {
    IntPoly bracket = IntPoly::Monomial(PowerOfTwo(m) - 1, 2) + IntPoly(1);
    return IntPoly::Monomial(scale, m * (n - 2)) * bracket;
  }
  IntPoly bracket = Power(IntPoly{1, 0, 1}, m) - Z(2 * m) + Z(2 * m - 2);
  return IntPoly::Monomial(scale, m * (n - 3) + 2) * bracket;
}

IntPoly DeltaMatroidLeafRecursion(const SetSystem& d, std::string_view e1,
                                  std::string_view e2, int limit) {
  auto fail = [](const std::string& clause) {
    throw Error(ErrorCode::kHypothesisViolated, clause);
  };
  const std::size_t i1 = d.IndexOf(e1);
  const std::size_t i2 = d.IndexOf(e2);
  if (i1 == i2) fail("e1 and e2 must be distinct");
  if (!d.IsNormal()) fail("D must be normal (empty set feasible)");
  if (!d.IsFeasible((Subset{1} << i1) | (Subset{1} << i2))) {
    fail("{" + std::string(e1) + ", " + std::string(e2) + "} must be feasible");
  }
  const SetSystem without_e1 = Delete(d, i1);
  const SetSystem without_both = Delete(without_e1, e2);
  const SetSystem expected =
      DirectSum(SetSystem({std::string(e1)}, {Subset{0}}), without_both);
  if (!EquivalentUpToGroundOrder(Delete(d, i2), expected)) {
    fail("D \\ " + std::string(e2) + " must equal ({" + std::string(e1) +
         "}, {{}}) + D \\ {" + std::string(e1) + ", " + std::string(e2) + "}");
  }
  return TwistPolynomial(without_e1, limit) +
         Mono(2, 2) * TwistPolynomial(without_both, limit);
}

}  // namespace deltatwist
