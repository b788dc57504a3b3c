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

// Twist polynomials T_D(z) = sum over A of z^{w(D*A)}, computed directly from
// a set system or, for graphs, from ranks of principal submatrices, together
// with the one-point-join recursions and closed forms they satisfy.
//
// Every recursion divides with ExactDiv, so a quotient that is not a
// polynomial surfaces as Error(kNonzeroRemainder) instead of being truncated.

#ifndef DELTATWIST_TWIST_POLYNOMIAL_H_
#define DELTATWIST_TWIST_POLYNOMIAL_H_

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "deltatwist/error.h"
#include "deltatwist/graph.h"
#include "deltatwist/polynomial.h"
#include "deltatwist/set_system.h"

namespace deltatwist {

// Straight from the definition: one twist and one width per subset A.
// Throws kNotProper, or kTooLarge for ground sets above `limit`.
IntPoly TwistPolynomial(const SetSystem& d, int limit = kDefaultSetSystemLimit);

struct RankTableOptions {
  int threads = 1;
  int limit = kDefaultRankTableLimit;
};

// rank M[A] for every A, indexed by the subset mask. One byte per subset.
std::vector<std::uint8_t> PrincipalRankTable(const LoopedGraph& g,
                                             const RankTableOptions& options = {});

// T_G(z) = sum over A of z^{rank M[A] + rank M[V-A]}, using one rank table.
// Output does not depend on options.threads.
IntPoly TwistPolynomial(const LoopedGraph& g, const RankTableOptions& options = {});

// The Z[z] coefficients with T(G1 v G2) = Q1 T(G2) + Q2 T(G2+v2) + Q3 T(G2-v2)
// for a fixed (G1, v1), from T(G1), T(G1+v1), T(G1-v1).
struct RecursionCoefficients {
  IntPoly q1;
  IntPoly q2;
  IntPoly q3;

  friend bool operator==(const RecursionCoefficients&,
                         const RecursionCoefficients&) = default;
};

RecursionCoefficients ComputeRecursionCoefficients(const IntPoly& t,
                                                   const IntPoly& t_plus,
                                                   const IntPoly& t_minus);

// Same, for a join vertex of either loop status. A looped v1 exchanges q1
// and q2 relative to the unlooped expressions above.
RecursionCoefficients ComputeRecursionCoefficients(const IntPoly& t,
                                                   const IntPoly& t_plus,
                                                   const IntPoly& t_minus,
                                                   bool join_vertex_looped);

// Applies the coefficients to the G2 side.
IntPoly ApplyRecursion(const RecursionCoefficients& q, const IntPoly& t2,
                       const IntPoly& t2_plus, const IntPoly& t2_minus);

struct JoinRecursionInput {
  IntPoly t1, t1_plus, t1_minus;  // T(G1), T(G1+v1), T(G1-v1)
  IntPoly t2, t2_plus, t2_minus;  // T(G2), T(G2+v2), T(G2-v2)
};

// Row (T1, T1+, T1-) times
//   [ -(z+1)   z        2z^2          ]
//   [  z      -(z+1)    2z^2          ]
//   [  2z^2    2z^2    -4z^2 (z+1)    ]
// times column (T2, T2+, T2-), divided exactly by 4z^2 - 2z - 2.
//
// This form is exact when the join vertex is unlooped. With a looped join
// vertex it generally gives a wrong value (single looped vertices joined
// give 2 instead of 2z); use JoinRecursion below.
IntPoly LoopedJoinRecursion(const JoinRecursionInput& in);

// Exact for either loop status: a looped join vertex exchanges the roles of
// T(G2) and T(G2+v2) in the column.
IntPoly JoinRecursion(const JoinRecursionInput& in, bool join_vertex_looped);

// Valid when G1-v1 or G2-v2 has no loops:
// (2z^2 T1 T2- + 2z^2 T1- T2 - T1 T2 - 4z^2 T1- T2-) / (2z^2 - 2).
// As with LoopedJoinRecursion, exact only for an unlooped join vertex.
IntPoly UnloopedJoinRecursion(const IntPoly& t1, const IntPoly& t1_minus,
                              const IntPoly& t2, const IntPoly& t2_minus);

// Either loop status. `first_side_unlooped` says G1-v1 is unlooped (else
// G2-v2 must be). With a looped join vertex, T(Gi+vi) replaces T(Gi) on
// that side.
IntPoly UnloopedJoinRecursion(const JoinRecursionInput& in,
                              bool join_vertex_looped, bool first_side_unlooped);

// G1 is a single edge w-v1 joined to G2 at v2:
//   w unlooped: T(G2) + 2z^2 T(G2-v2)
//   w looped:   z T(G2) + z T(G2+v2)
IntPoly LeafRecursion(const IntPoly& t2, const IntPoly& t2_plus,
                      const IntPoly& t2_minus, bool leaf_looped);

// T_G(-1/2) + T_{G+v}(-1/2) - T_{G-v}(-1/2); zero for every G and v.
Rational MinusHalfDefect(const LoopedGraph& g, std::string_view v,
                         const RankTableOptions& options = {});

// For unlooped G: T(G+v) = (z T(G) + 2z^2 T(G-v)) / (z + 1). A looped G
// usually gives kNonzeroRemainder or a wrong value.
IntPoly LoopComplementFormula(const IntPoly& t_g, const IntPoly& t_g_minus);

// T(K_n) for n >= 1.
IntPoly CompleteGraphClosedForm(int n);
// T of the windmill K_n^(m) for n >= 2, m >= 1.
IntPoly WindmillClosedForm(int n, int m);

// T(D) = T(D \ e1) + 2z^2 T(D \ {e1, e2}) for a normal D with {e1, e2}
// feasible and D \ e2 = ({e1}, {{}}) + D \ {e1, e2}. The hypotheses are
// checked; a failure throws kHypothesisViolated naming the clause.
IntPoly DeltaMatroidLeafRecursion(const SetSystem& d, std::string_view e1,
                                  std::string_view e2,
                                  int limit = kDefaultSetSystemLimit);

}  // namespace deltatwist

#endif  // DELTATWIST_TWIST_POLYNOMIAL_H_
