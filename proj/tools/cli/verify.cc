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

#include "cli/verify.h"

#include <algorithm>
#include <chrono>
#include <exception>
#include <sstream>
#include <thread>
#include <utility>

#include "deltatwist/bouquet.h"
#include "deltatwist/error.h"
#include "deltatwist/gf2.h"
#include "deltatwist/graph.h"
#include "deltatwist/int_matrix.h"
#include "deltatwist/join_blocks.h"
#include "deltatwist/polynomial.h"
#include "deltatwist/set_system.h"
#include "deltatwist/twist_polynomial.h"

namespace deltatwist::cli {
namespace {

std::string Block(const std::string& title, const std::string& body) {
  return "# " + title + "\n" + body;
}

std::string Labels(const std::vector<std::string>& labels) {
  std::string out;
  for (const auto& l : labels) out += (out.empty() ? "" : " ") + l;
  return out;
}

LoopedGraph DrawGraph(Rng& rng, int lo, int hi) {
  const int n = rng.Between(lo, hi);
  const double edge_p = 0.2 + 0.6 * rng.Unit();
  const double loop_p = 0.5 * rng.Unit();
  return RandomGraph(n, edge_p, loop_p, rng);
}

LoopedGraph DrawUnloopedGraph(Rng& rng, int lo, int hi) {
  const int n = rng.Between(lo, hi);
  return RandomGraph(n, 0.2 + 0.6 * rng.Unit(), 0.0, rng);
}

std::size_t DrawVertex(Rng& rng, const LoopedGraph& g) {
  return static_cast<std::size_t>(rng.Below(g.size()));
}

Subset DrawSubset(Rng& rng, std::size_t n, double p = 0.5) {
  Subset s = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (rng.Bernoulli(p)) s |= Subset{1} << i;
  }
  return s;
}

TrialOutcome Pass() { return {}; }

TrialOutcome Fail(std::string inputs) { return {false, std::move(inputs)}; }

std::string Mismatch(const IntPoly& got, const IntPoly& want) {
  return "# formula: " + got.ToString() + "\n# direct:  " + want.ToString() + "\n";
}

// The six polynomials of a join, all by enumeration.
struct JoinSides {
  LoopedGraph g1, g2;
  std::size_t v1 = 0, v2 = 0;

  std::string Inputs() const {
    return Block("G1, join vertex " + g1.label(v1), SerializeGraph(g1)) +
           Block("G2, join vertex " + g2.label(v2), SerializeGraph(g2));
  }
};

JoinRecursionInput SixPolynomials(const JoinSides& s) {
  JoinRecursionInput in;
  in.t1 = TwistPolynomial(s.g1);
  in.t1_plus = TwistPolynomial(LoopComplement(s.g1, s.v1));
  in.t1_minus = TwistPolynomial(DeleteVertex(s.g1, s.v1));
  in.t2 = TwistPolynomial(s.g2);
  in.t2_plus = TwistPolynomial(LoopComplement(s.g2, s.v2));
  in.t2_minus = TwistPolynomial(DeleteVertex(s.g2, s.v2));
  return in;
}

IntPoly JoinedPolynomial(const JoinSides& s) {
  return TwistPolynomial(OnePointJoin(s.g1, s.v1, s.g2, s.v2));
}

JoinSides DrawJoin(Rng& rng, int max_n) {
  JoinSides s;
  s.g1 = DrawGraph(rng, 1, max_n);
  s.g2 = DrawGraph(rng, 1, max_n);
  s.v1 = DrawVertex(rng, s.g1);
  s.v2 = DrawVertex(rng, s.g2);
  s.g2.SetLoop(s.v2, s.g1.HasLoop(s.v1));
  return s;
}

// ---------------------------------------------------------------------------
// Trials.

TrialOutcome LoopedRecursionTrial(Rng& rng, int, const VerifyOptions& o) {
  const JoinSides s = DrawJoin(rng, o.max_n);
  const IntPoly want = JoinedPolynomial(s);
  const IntPoly got = LoopedJoinRecursion(SixPolynomials(s));
  return got == want ? Pass() : Fail(s.Inputs() + Mismatch(got, want));
}

TrialOutcome GeneralJoinTrial(Rng& rng, int, const VerifyOptions& o) {
  const JoinSides s = DrawJoin(rng, o.max_n);
  const IntPoly want = JoinedPolynomial(s);
  const IntPoly got = JoinRecursion(SixPolynomials(s), s.g1.HasLoop(s.v1));
  return got == want ? Pass() : Fail(s.Inputs() + Mismatch(got, want));
}

// One side has G_i - v_i unlooped; the join vertex is looped 30% of the time.
JoinSides DrawUnloopedSideJoin(Rng& rng, int max_n, bool& first_unlooped) {
  JoinSides s;
  first_unlooped = rng.Bernoulli(0.5);
  s.g1 = first_unlooped ? DrawUnloopedGraph(rng, 1, max_n)
                        : DrawGraph(rng, 1, max_n);
  s.g2 = first_unlooped ? DrawGraph(rng, 1, max_n)
                        : DrawUnloopedGraph(rng, 1, max_n);
  s.v1 = DrawVertex(rng, s.g1);
  s.v2 = DrawVertex(rng, s.g2);
  const bool join_loop = rng.Bernoulli(0.3);
  s.g1.SetLoop(s.v1, join_loop);
  s.g2.SetLoop(s.v2, join_loop);
  return s;
}

TrialOutcome UnloopedRecursionTrial(Rng& rng, int, const VerifyOptions& o) {
  bool first_unlooped = false;
  const JoinSides s = DrawUnloopedSideJoin(rng, o.max_n, first_unlooped);
  const JoinRecursionInput in = SixPolynomials(s);
  const IntPoly want = JoinedPolynomial(s);
  const IntPoly got = UnloopedJoinRecursion(in.t1, in.t1_minus, in.t2, in.t2_minus);
  return got == want ? Pass() : Fail(s.Inputs() + Mismatch(got, want));
}

TrialOutcome GeneralUnloopedTrial(Rng& rng, int, const VerifyOptions& o) {
  bool first_unlooped = false;
  const JoinSides s = DrawUnloopedSideJoin(rng, o.max_n, first_unlooped);
  const IntPoly want = JoinedPolynomial(s);
  const IntPoly got = UnloopedJoinRecursion(SixPolynomials(s), s.g1.HasLoop(s.v1),
                                            first_unlooped);
  return got == want ? Pass() : Fail(s.Inputs() + Mismatch(got, want));
}

TrialOutcome LeafTrial(Rng& rng, int trial, const VerifyOptions& o) {
  JoinSides s;
  s.g2 = DrawGraph(rng, 1, o.max_n);
  s.v2 = DrawVertex(rng, s.g2);
  const bool leaf_looped = trial % 2 == 1;
  s.g1 = LoopedGraph({"w", "x"});
  s.g1.SetEdge(0, 1, true);
  s.g1.SetLoop(0, leaf_looped);
  s.g1.SetLoop(1, s.g2.HasLoop(s.v2));
  s.v1 = 1;
  const IntPoly want = JoinedPolynomial(s);
  const IntPoly got = LeafRecursion(
      TwistPolynomial(s.g2), TwistPolynomial(LoopComplement(s.g2, s.v2)),
      TwistPolynomial(DeleteVertex(s.g2, s.v2)), leaf_looped);
  return got == want ? Pass() : Fail(s.Inputs() + Mismatch(got, want));
}

TrialOutcome MinusHalfTrial(Rng& rng, int, const VerifyOptions& o) {
  const LoopedGraph g = DrawGraph(rng, 1, o.max_n);
  const std::string v = g.label(DrawVertex(rng, g));
  const Rational defect = MinusHalfDefect(g, v);
  if (defect == 0) return Pass();
  std::ostringstream note;
  note << "# vertex " << v << ", defect " << defect << "\n";
  return Fail(Block("G", SerializeGraph(g)) + note.str());
}

TrialOutcome LoopcompUnloopedTrial(Rng& rng, int, const VerifyOptions& o) {
  const LoopedGraph g = DrawUnloopedGraph(rng, 1, o.max_n);
  const std::size_t v = DrawVertex(rng, g);
  const IntPoly want = TwistPolynomial(LoopComplement(g, v));
  const IntPoly got = LoopComplementFormula(TwistPolynomial(g),
                                            TwistPolynomial(DeleteVertex(g, v)));
  if (got == want) return Pass();
  return Fail(Block("G, vertex " + g.label(v), SerializeGraph(g)) +
              Mismatch(got, want));
}

struct ClosedFormCase {
  std::string name;
  LoopedGraph graph;
  IntPoly expected;
};

std::vector<ClosedFormCase> ClosedFormCases(int max_n) {
  std::vector<ClosedFormCase> cases;
  for (int n = 1; n <= max_n; ++n) {
    cases.push_back({"K_" + std::to_string(n), CompleteGraph(n),
                     CompleteGraphClosedForm(n)});
  }
  for (int n = 2; n <= max_n; ++n) {
    for (int m = 1; 1 + m * (n - 1) <= max_n; ++m) {
      cases.push_back({"windmill " + std::to_string(n) + " " + std::to_string(m),
                       WindmillGraph(n, m), WindmillClosedForm(n, m)});
    }
  }
  return cases;
}

TrialOutcome ClosedFormsTrial(Rng&, int trial, const VerifyOptions& o) {
  const auto cases = ClosedFormCases(o.max_n);
  const auto& c = cases[static_cast<std::size_t>(trial) % cases.size()];
  const IntPoly got = TwistPolynomial(c.graph);
  if (got == c.expected) return Pass();
  return Fail(Block(c.name, SerializeGraph(c.graph)) + Mismatch(c.expected, got));
}

TrialOutcome JoinSetSystemTrial(Rng& rng, int, const VerifyOptions& o) {
  const JoinSides s = DrawJoin(rng, o.max_n);
  const SetSystem want = FromGraph(OnePointJoin(s.g1, s.v1, s.g2, s.v2));
  const SetSystem got = OnePointJoin(FromGraph(s.g1), s.v1, FromGraph(s.g2), s.v2);
  if (got == want) return Pass();
  return Fail(s.Inputs() + Block("set-system join", SerializeSetSystem(got)) +
              Block("D(G1 v G2)", SerializeSetSystem(want)));
}

TrialOutcome LoopcompCorrespondenceTrial(Rng& rng, int, const VerifyOptions& o) {
  const LoopedGraph g = DrawGraph(rng, 1, o.max_n);
  const std::size_t v = DrawVertex(rng, g);
  const SetSystem want = FromGraph(LoopComplement(g, v));
  const SetSystem got = LoopComplement(FromGraph(g), v);
  if (got == want) return Pass();
  return Fail(Block("G, vertex " + g.label(v), SerializeGraph(g)) +
              Block("D(G)+v", SerializeSetSystem(got)) +
              Block("D(G+v)", SerializeSetSystem(want)));
}

Bouquet DrawBouquet(Rng& rng, int max_e) {
  const int e = rng.Between(1, max_e);
  return RandomBouquet(e, 0.5 * rng.Unit(), rng);
}

TrialOutcome MellorTrial(Rng& rng, int, const VerifyOptions& o) {
  const Bouquet b = DrawBouquet(rng, o.max_n);
  const Gf2SymMatrix adj = IntersectionGraph(b).adjacency();
  for (Subset a = 0; a < (Subset{1} << b.edge_count()); ++a) {
    const int corank = std::popcount(a) - Rank(PrincipalSubmatrix(adj, a));
    const int bc = BoundaryComponents(b, a);
    if (bc != corank + 1) {
      return Fail(Block("bouquet", SerializeBouquet(b)) + "# A = {" +
                  Labels(b.LabelsOf(a)) + "}, bc " + std::to_string(bc) +
                  ", corank + 1 = " + std::to_string(corank + 1) + "\n");
    }
  }
  return Pass();
}

TrialOutcome QuasiTreeTrial(Rng& rng, int, const VerifyOptions& o) {
  const Bouquet b = DrawBouquet(rng, o.max_n);
  const LoopedGraph ig = IntersectionGraph(b);
  const SetSystem qt = QuasiTreeDeltaMatroid(b);
  std::string why;
  if (qt != FromGraph(ig)) why += "# quasi-tree delta-matroid differs from D(I(B))\n";
  const IntPoly genus = PartialDualGenusPolynomial(b);
  const IntPoly twist = TwistPolynomial(ig);
  if (genus != twist) why += "# genus polynomial " + genus.ToString() +
                             " but T(I(B)) = " + twist.ToString() + "\n";
  if (EulerGenus(b) != Width(qt)) why += "# Euler genus differs from w(D(B))\n";
  if (why.empty()) return Pass();
  return Fail(Block("bouquet", SerializeBouquet(b)) + why);
}

TrialOutcome ExchangeAxiomTrial(Rng& rng, int, const VerifyOptions& o) {
  const LoopedGraph g = DrawGraph(rng, 1, o.max_n);
  const SetSystem d = FromGraph(g);
  const auto violation = FindExchangeViolation(d);
  if (!violation) return Pass();
  return Fail(Block("G", SerializeGraph(g)) + Block("D(G)", SerializeSetSystem(d)));
}

template <typename Matrix, typename Draw>
JoinBlocks<Matrix> DrawBlocks(Rng& rng, int max_n, Draw draw) {
  using Scalar = typename Matrix::Scalar;
  const int n = rng.Between(0, max_n);
  const int m = rng.Between(0, max_n);
  JoinBlocks<Matrix> blocks;
  blocks.a_prime = Matrix(n, n);
  blocks.b_prime = Matrix(m, m);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) blocks.a_prime.Set(i, j, draw());
  }
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) blocks.b_prime.Set(i, j, draw());
  }
  auto vec = [&](int len) {
    std::vector<Scalar> out;
    for (int i = 0; i < len; ++i) out.push_back(draw());
    return out;
  };
  blocks.u = vec(n);
  blocks.v = vec(n);
  blocks.c = draw();
  blocks.x = vec(m);
  blocks.y = vec(m);
  return blocks;
}

template <typename Matrix>
std::string MatrixText(const Matrix& m) {
  std::ostringstream out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out << "#";
    for (std::size_t j = 0; j < m.cols(); ++j) out << " " << m.Get(i, j);
    out << "\n";
  }
  return out.str();
}

TrialOutcome DetIdentityTrial(Rng& rng, int, const VerifyOptions& o) {
  const int size = std::min(o.max_n, 6);
  auto gf2 = DrawBlocks<Gf2Matrix>(rng, size, [&] { return Gf2{rng.Bernoulli(0.5)}; });
  auto ints = DrawBlocks<IntMatrix>(rng, size, [&] { return BigInt(rng.Between(-3, 3)); });
  const auto gf2_check = CheckDetIdentity(gf2);
  const auto int_check = CheckDetIdentity(ints);
  if (gf2_check.holds && int_check.holds) return Pass();
  if (!gf2_check.holds) {
    return Fail("# GF(2) matrix, n = " + std::to_string(gf2.n()) + ", m = " +
                std::to_string(gf2.m()) + "\n" + MatrixText(AssembleJoin(gf2)));
  }
  return Fail("# integer matrix, n = " + std::to_string(ints.n()) + ", m = " +
              std::to_string(ints.m()) + "\n" + MatrixText(AssembleJoin(ints)));
}

TrialOutcome DmLeafTrial(Rng& rng, int, const VerifyOptions& o) {
  const LoopedGraph g2 = DrawGraph(rng, 1, std::max(1, o.max_n - 1));
  const std::size_t v = DrawVertex(rng, g2);
  LoopedGraph leaf({"p", "w"});
  leaf.SetEdge(0, 1, true);
  leaf.SetLoop(0, g2.HasLoop(v));
  const LoopedGraph g = OnePointJoin(g2, v, leaf, std::size_t{0});
  const std::string e1 = g.label(g.size() - 1);
  const std::string e2 = g.label(v);
  const SetSystem d = FromGraph(g);
  const IntPoly got = DeltaMatroidLeafRecursion(d, e1, e2);
  const IntPoly want = TwistPolynomial(d);
  if (got == want) return Pass();
  return Fail(Block("D, e1 = " + e1 + ", e2 = " + e2, SerializeSetSystem(d)) +
              Mismatch(got, want));
}

TrialOutcome NearestFeasibleTrial(Rng& rng, int, const VerifyOptions& o) {
  const LoopedGraph g = DrawGraph(rng, 1, o.max_n);
  const std::size_t n = g.size();
  const SetSystem d = Twist(FromGraph(g), DrawSubset(rng, n));
  const Subset x = DrawSubset(rng, n);
  const Subset y = x & DrawSubset(rng, n, 0.3);
  const Subset z = ~x & d.FullSet() & DrawSubset(rng, n, 0.3);
  const auto found = FindNearestFeasible(d, x, y, z);
  bool witness_exists = false;
  for (Subset f : d.feasible()) {
    if ((f & y) == y && (f & z) == 0) witness_exists = true;
  }
  const bool ok = found ? found->distance == found->global_minimum && witness_exists
                        : !witness_exists;
  if (ok) return Pass();
  return Fail(Block("D", SerializeSetSystem(d)) + "# X = {" +
              Labels(d.LabelsOf(x)) + "}, Y = {" + Labels(d.LabelsOf(y)) +
              "}, Z = {" + Labels(d.LabelsOf(z)) + "}\n");
}

TrialOutcome RankPrincipalTrial(Rng& rng, int, const VerifyOptions& o) {
  const int n = rng.Between(0, o.max_n);
  Gf2SymMatrix m(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) m.Set(i, j, rng.Bernoulli(0.5));
  }
  if (Rank(m) == MaxNonsingularPrincipalOrder(m)) return Pass();
  return Fail("# symmetric GF(2) matrix\n" + MatrixText(m.matrix()));
}

TrialOutcome DirectSumTrial(Rng& rng, int, const VerifyOptions& o) {
  const LoopedGraph g1 = DrawGraph(rng, 0, std::max(1, o.max_n / 2));
  const LoopedGraph g2 = DrawGraph(rng, 0, std::max(1, o.max_n - o.max_n / 2));
  const SetSystem d1 = Twist(FromGraph(g1), DrawSubset(rng, g1.size()));
  const SetSystem d2 = Twist(FromGraph(g2), DrawSubset(rng, g2.size()));
  const IntPoly got = TwistPolynomial(DirectSum(d1, d2));
  const IntPoly want = TwistPolynomial(d1) * TwistPolynomial(d2);
  if (got == want) return Pass();
  return Fail(Block("D1", SerializeSetSystem(d1)) +
              Block("D2", SerializeSetSystem(d2)) + Mismatch(got, want));
}

// ---------------------------------------------------------------------------
// Expected-fail controls.

std::vector<ControlOutcome> ExchangeControls() {
  const SetSystem d({"a", "b", "c"}, {Subset{0}, Subset{7}});
  ControlOutcome c{"{{}, {a,b,c}}", !SatisfiesSymmetricExchange(d), ""};
  c.detail = c.failed_as_expected ? "exchange violated" : "exchange held";
  return {c};
}

std::vector<ControlOutcome> LoopcompControls() {
  // A looped vertex next to an unlooped one.
  LoopedGraph g({"a", "b"});
  g.SetEdge(0, 1, true);
  g.SetLoop(0, true);
  ControlOutcome c{"looped G = a-b, loop at a; v = b", false, ""};
  try {
    const IntPoly got = LoopComplementFormula(TwistPolynomial(g),
                                              TwistPolynomial(DeleteVertex(g, 1)));
    c.failed_as_expected = got != TwistPolynomial(LoopComplement(g, 1));
    c.detail = c.failed_as_expected ? "value mismatch" : "formula held";
  } catch (const Error& e) {
    c.failed_as_expected = e.code() == ErrorCode::kNonzeroRemainder;
    c.detail = e.what();
  }
  return {c};
}

std::vector<ControlOutcome> NoControls() { return {}; }

}  // namespace

bool VerifyReport::ok() const {
  if (passed != attempted) return false;
  return std::all_of(controls.begin(), controls.end(),
                     [](const ControlOutcome& c) { return c.failed_as_expected; });
}

const std::vector<IdentitySpec>& IdentityRegistry() {
  static const std::vector<IdentitySpec> registry = {
      {"looped-recursion", "T(G1 v G2) from the six brute-force polynomials",
       12, LoopedRecursionTrial, NoControls},
      {"unlooped-recursion", "join recursion with G1-v1 or G2-v2 unlooped", 12,
       UnloopedRecursionTrial, NoControls},
      {"looped-recursion-general",
       "join recursion with T(G2), T(G2+v2) exchanged at a looped join vertex",
       12, GeneralJoinTrial, NoControls},
      {"unlooped-recursion-general",
       "unlooped-side recursion with T(Gi+vi) for T(Gi) at a looped join vertex",
       12, GeneralUnloopedTrial, NoControls},
      {"leaf", "pendant-edge recursion, both loop statuses of the leaf", 20,
       LeafTrial, NoControls},
      {"minus-half", "T_G + T_{G+v} - T_{G-v} vanishes at z = -1/2", 20,
       MinusHalfTrial, NoControls},
      {"loopcomp-unlooped", "T(G+v) = (z T_G + 2z^2 T_{G-v}) / (z+1), G unlooped",
       20, LoopcompUnloopedTrial, LoopcompControls},
      {"closed-forms", "complete graphs and windmills against closed forms", 20,
       ClosedFormsTrial, NoControls},
      {"join-setsystem", "D(G1 v G2) = D(G1) v D(G2)", 10, JoinSetSystemTrial,
       NoControls},
      {"loopcomp-correspondence", "D(G+v) = D(G)+v", 20,
       LoopcompCorrespondenceTrial, NoControls},
      {"mellor", "bc(A) = corank of I(B)[A] + 1", 16, MellorTrial, NoControls},
      {"quasitree", "quasi-trees of B give D(I(B)); genus polynomial = T(I(B))",
       16, QuasiTreeTrial, NoControls},
      {"exchange-axiom", "D(G) satisfies symmetric exchange", 12,
       ExchangeAxiomTrial, ExchangeControls},
      {"det-identity", "determinant of a one-point-joined matrix", 64,
       DetIdentityTrial, NoControls},
      {"dm-leaf", "T(D) = T(D\\e1) + 2z^2 T(D\\{e1,e2}) at a pendant vertex", 20,
       DmLeafTrial, NoControls},
      {"nearest-feasible", "a constrained nearest feasible set is globally nearest",
       20, NearestFeasibleTrial, NoControls},
      {"rank-principal", "rank = largest nonsingular principal submatrix", 20,
       RankPrincipalTrial, NoControls},
      {"direct-sum", "T(D1 + D2) = T(D1) T(D2)", 20, DirectSumTrial, NoControls},
  };
  return registry;
}

const IdentitySpec& FindIdentity(std::string_view name) {
  for (const auto& spec : IdentityRegistry()) {
    if (spec.name == name) return spec;
  }
  throw Error(ErrorCode::kUnknownIdentity,
              "no identity named '" + std::string(name) + "'");
}

VerifyReport RunVerify(const IdentitySpec& spec, const VerifyOptions& options) {
  if (options.trials < 0 || options.max_n < 1) {
    throw Error(ErrorCode::kBadParams, "--trials must be >= 0 and --max-n >= 1");
  }
  if (options.max_n > spec.max_n_cap) {
    throw Error(ErrorCode::kTooLarge,
                spec.name + " accepts --max-n up to " +
                    std::to_string(spec.max_n_cap));
  }
  const auto start = std::chrono::steady_clock::now();
  const Rng base = Rng(options.seed).Split(spec.name);
  const int trials = options.trials;
  std::vector<TrialOutcome> outcomes(static_cast<std::size_t>(trials));

  auto run_range = [&](int lo, int hi) {
    for (int t = lo; t < hi; ++t) {
      Rng rng = base.Split(static_cast<std::uint64_t>(t));
      auto& out = outcomes[static_cast<std::size_t>(t)];
      try {
        out = spec.trial(rng, t, options);
      } catch (const Error& e) {
        out = Fail(std::string("# raised ") + e.what() + "\n");
      }
    }
  };
  const int threads = std::max(1, std::min(options.threads, trials));
  if (threads <= 1) {
    run_range(0, trials);
  } else {
    std::vector<std::thread> workers;
    for (int p = 0; p < threads; ++p) {
      workers.emplace_back(run_range, trials * p / threads,
                           trials * (p + 1) / threads);
    }
    for (auto& w : workers) w.join();
  }

  VerifyReport report;
  report.identity = spec.name;
  report.attempted = trials;
  for (int t = 0; t < trials; ++t) {
    const auto& out = outcomes[static_cast<std::size_t>(t)];
    if (out.passed) {
      ++report.passed;
    } else if (!report.counterexample) {
      report.counterexample = Counterexample{t, out.counterexample};
    }
  }
  report.controls = spec.controls();
  report.wall_seconds = std::chrono::duration<double>(
                            std::chrono::steady_clock::now() - start)
                            .count();
  return report;
}

std::string FormatReport(const VerifyReport& r) {
  std::ostringstream out;
  out << r.identity << ": " << r.passed << "/" << r.attempted
      << " trials passed\n";
  if (!r.controls.empty()) {
    int confirmed = 0;
    for (const auto& c : r.controls) confirmed += c.failed_as_expected ? 1 : 0;
    out << "  expected-fail controls: " << confirmed << "/" << r.controls.size()
        << (confirmed == static_cast<int>(r.controls.size())
                ? " failed as expected (expected-fail passed)\n"
                : " failed as expected\n");
    for (const auto& c : r.controls) {
      out << "    " << (c.failed_as_expected ? "ok  " : "FAIL") << " " << c.name
          << ": " << c.detail << "\n";
    }
  }
  if (r.counterexample) {
    out << "  counterexample (trial " << r.counterexample->trial << "):\n"
        << r.counterexample->inputs;
  } else {
    out << "  counterexample: none\n";
  }
  return out.str();
}

nlohmann::json ReportToJson(const VerifyReport& r) {
  nlohmann::json j;
  j["identity"] = r.identity;
  j["attempted"] = r.attempted;
  j["passed"] = r.passed;
  j["ok"] = r.ok();
  if (r.counterexample) {
    j["counterexample"] = {{"trial", r.counterexample->trial},
                           {"inputs", r.counterexample->inputs}};
  } else {
    j["counterexample"] = nullptr;
  }
  j["controls"] = nlohmann::json::array();
  for (const auto& c : r.controls) {
    j["controls"].push_back({{"name", c.name},
                             {"failed_as_expected", c.failed_as_expected},
                             {"detail", c.detail}});
  }
  return j;
}

}  // namespace deltatwist::cli
