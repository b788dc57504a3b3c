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

#include "cli/commands.h"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cli/verify.h"
#include "deltatwist/bouquet.h"
#include "deltatwist/graph.h"
#include "deltatwist/polynomial.h"
#include "deltatwist/set_system.h"
#include "deltatwist/twist_polynomial.h"
#include "json.hpp"

namespace deltatwist::cli {
namespace {

using nlohmann::json;

struct GlobalFlags {
  bool json = false;
  std::uint64_t seed = 0;
  int threads = 1;
  int max_n = 0;
  bool max_n_given = false;
};

class Session {
 public:
  Session(const Environment& env, const GlobalFlags& flags)
      : env_(env), flags_(flags) {}

  std::string ReadInput(const std::string& path) const {
    if (path == "-") {
      return std::string(std::istreambuf_iterator<char>(*env_.in), {});
    }
    std::ifstream file(path);
    if (!file) throw Error(ErrorCode::kParseError, "cannot open '" + path + "'");
    return std::string(std::istreambuf_iterator<char>(file), {});
  }

  // --max-n, then DELTATWIST_MAX_N, then the library default.
  int Guard(int fallback) const {
    if (flags_.max_n_given) return flags_.max_n;
    if (env_.max_n_env) {
      try {
        std::size_t used = 0;
        const int value = std::stoi(*env_.max_n_env, &used);
        if (used == env_.max_n_env->size() && value > 0) return value;
      } catch (const std::exception&) {
      }
      throw Error(ErrorCode::kBadParams,
                  "DELTATWIST_MAX_N must be a positive integer");
    }
    return fallback;
  }

  std::ostream& out() const { return *env_.out; }
  std::ostream& err() const { return *env_.err; }
  const GlobalFlags& flags() const { return flags_; }

 private:
  const Environment& env_;
  const GlobalFlags& flags_;
};

json PolynomialJson(const IntPoly& p) {
  json coefficients = json::array();
  for (const auto& c : p.coefficients()) coefficients.push_back(c.str());
  return {{"polynomial", p.ToString()}, {"coefficients", coefficients}};
}

void PrintJson(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

void EmitGraph(const Session& s, const LoopedGraph& g) {
  if (s.flags().json) {
    PrintJson(s.out(), {{"graph", SerializeGraph(g)}});
  } else {
    s.out() << SerializeGraph(g);
  }
}

int CmdTwist(const Session& s, const std::string& kind, const std::string& path,
             std::string method) {
  const std::string text = s.ReadInput(path);
  IntPoly p;
  if (kind == "graph") {
    const LoopedGraph g = ParseGraph(text);
    if (method == "auto") method = "rank";
    if (method == "rank") {
      RankTableOptions options;
      options.threads = s.flags().threads;
      options.limit = s.Guard(kDefaultRankTableLimit);
      p = TwistPolynomial(g, options);
    } else {
      const int limit = s.Guard(kDefaultSetSystemLimit);
      p = TwistPolynomial(FromGraph(g, limit), limit);
    }
  } else {
    if (method == "rank") {
      s.err() << "error: --method rank needs a graph; use 'twist graph'\n";
      return kExitUsage;
    }
    method = "setsystem";
    p = TwistPolynomial(ParseSetSystem(text), s.Guard(kDefaultSetSystemLimit));
  }
  if (s.flags().json) {
    json j = PolynomialJson(p);
    j["method"] = method;
    PrintJson(s.out(), j);
  } else {
    s.out() << p.ToString() << "\n";
  }
  return kExitOk;
}

int CmdGen(const Session& s, const std::string& family,
           const std::vector<double>& params) {
  EmitGraph(s, GenerateGraph(family, params, s.flags().seed));
  return kExitOk;
}

int CmdJoin(const Session& s, const std::string& file1, const std::string& v1,
            const std::string& file2, const std::string& v2) {
  const LoopedGraph g1 = ParseGraph(s.ReadInput(file1));
  const LoopedGraph g2 = ParseGraph(s.ReadInput(file2));
  EmitGraph(s, OnePointJoin(g1, v1, g2, v2));
  return kExitOk;
}

int CmdLoopcomp(const Session& s, const std::string& file, const std::string& v) {
  EmitGraph(s, LoopComplement(ParseGraph(s.ReadInput(file)), v));
  return kExitOk;
}

int CmdGenus(const Session& s, const std::string& file) {
  const Bouquet b = ParseBouquet(s.ReadInput(file));
  const IntPoly p = PartialDualGenusPolynomial(b, s.Guard(kDefaultBouquetLimit));
  const int genus = EulerGenus(b);
  const int bc = BoundaryComponents(b, b.AllEdges());
  const std::string graph = SerializeGraph(IntersectionGraph(b));
  if (s.flags().json) {
    json j = PolynomialJson(p);
    j["euler_genus"] = genus;
    j["boundary_components"] = bc;
    j["intersection_graph"] = graph;
    PrintJson(s.out(), j);
  } else {
    s.out() << "euler_genus: " << genus << "\n"
            << "boundary_components: " << bc << "\n"
            << "genus_polynomial: " << p.ToString() << "\n"
            << "intersection_graph:\n"
            << graph;
  }
  return kExitOk;
}

int CmdPetrial(const Session& s, const std::string& file,
               const std::vector<std::string>& edges) {
  const Bouquet b = PartialPetrial(ParseBouquet(s.ReadInput(file)), edges);
  if (s.flags().json) {
    PrintJson(s.out(), {{"bouquet", SerializeBouquet(b)}});
  } else {
    s.out() << SerializeBouquet(b);
  }
  return kExitOk;
}

int CmdVerify(const Session& s, const std::string& identity, int trials) {
  std::vector<const IdentitySpec*> specs;
  if (identity == "all") {
    for (const auto& spec : IdentityRegistry()) specs.push_back(&spec);
  } else {
    specs.push_back(&FindIdentity(identity));
  }
  json reports = json::array();
  bool all_ok = true;
  for (const IdentitySpec* spec : specs) {
    VerifyOptions options;
    options.trials = trials;
    options.seed = s.flags().seed;
    options.threads = s.flags().threads;
    if (s.flags().max_n_given) options.max_n = s.flags().max_n;
    if (identity == "all") options.max_n = std::min(options.max_n, spec->max_n_cap);
    const VerifyReport report = RunVerify(*spec, options);
    all_ok = all_ok && report.ok();
    if (s.flags().json) {
      reports.push_back(ReportToJson(report));
    } else {
      s.out() << FormatReport(report);
    }
    s.err() << report.identity << ": wall time " << std::fixed
            << std::setprecision(3) << report.wall_seconds << " s\n";
  }
  if (s.flags().json) {
    PrintJson(s.out(), identity == "all" ? reports : reports.front());
  }
  return all_ok ? kExitOk : kExitCounterexample;
}

}  // namespace

int ExitCodeFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::kTooLarge:
      return kExitTooLarge;
    case ErrorCode::kParseError:
    case ErrorCode::kUnknownLabel:
    case ErrorCode::kDuplicateLabel:
    case ErrorCode::kDuplicateEdge:
    case ErrorCode::kSelfEdgeViaEdgeLine:
    case ErrorCode::kMissingVerticesLine:
    case ErrorCode::kLabelCountNotTwo:
    case ErrorCode::kUnknownTwistLabel:
    case ErrorCode::kUnknownEdgeLabel:
    case ErrorCode::kUnknownElement:
    case ErrorCode::kDuplicateFeasible:
    case ErrorCode::kUnknownIdentity:
    case ErrorCode::kBadParams:
      return kExitUsage;
    default:
      return kExitPrecondition;
  }
}

int RunCli(int argc, const char* const* argv, const Environment& env) {
  GlobalFlags flags;
  CLI::App app{"Twist polynomials of delta-matroids, looped graphs and bouquets"};
  app.name("deltatwist");
  app.fallthrough();
  app.require_subcommand(1);
  app.add_flag("--json", flags.json, "Emit JSON");
  app.add_option("--seed", flags.seed, "Seed for all randomness");
  app.add_option("--threads", flags.threads, "Worker threads")
      ->check(CLI::PositiveNumber);
  CLI::Option* max_n_opt =
      app.add_option("--max-n", flags.max_n,
                     "Size guard for enumerations; trial size for verify")
          ->check(CLI::PositiveNumber);

  std::string kind, path, method = "auto";
  auto* twist = app.add_subcommand("twist", "Twist polynomial of a graph or set system");
  twist->add_option("kind", kind, "graph or dm")
      ->required()
      ->check(CLI::IsMember({"graph", "dm"}));
  twist->add_option("file", path, "Input file, '-' for stdin")->required();
  twist->add_option("--method", method, "rank, setsystem or auto")
      ->check(CLI::IsMember({"rank", "setsystem", "auto"}));

  std::string family;
  std::vector<double> params;
  auto* gen = app.add_subcommand("gen", "Generate a graph family");
  gen->add_option("family", family, "complete, path, star, windmill or random")
      ->required();
  gen->add_option("params", params, "Family parameters");

  std::string file1, v1, file2, v2;
  auto* join = app.add_subcommand("join", "One-point join of two graphs");
  join->add_option("file1", file1)->required();
  join->add_option("v1", v1)->required();
  join->add_option("file2", file2)->required();
  join->add_option("v2", v2)->required();

  std::string genus_file;
  auto* genus = app.add_subcommand("genus", "Euler genus data of a bouquet");
  genus->add_option("file", genus_file, "Bouquet file, '-' for stdin")->required();

  std::string identity;
  int trials = 100;
  auto* verify = app.add_subcommand("verify", "Check an identity on seeded trials");
  verify->add_option("identity", identity, "Identity name or 'all'")->required();
  verify->add_option("--trials", trials, "Number of trials")
      ->check(CLI::NonNegativeNumber);

  std::string loop_file, loop_vertex;
  auto* loopcomp = app.add_subcommand("loopcomp", "Toggle the loop at a vertex");
  loopcomp->add_option("file", loop_file)->required();
  loopcomp->add_option("vertex", loop_vertex)->required();

  std::string petrial_file;
  std::vector<std::string> petrial_edges;
  auto* petrial = app.add_subcommand("petrial", "Partial Petrial of a bouquet");
  petrial->add_option("file", petrial_file)->required();
  petrial->add_option("edges", petrial_edges, "Edges to twist");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, *env.out, *env.err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  flags.max_n_given = max_n_opt->count() > 0;
  const Session session(env, flags);

  try {
    if (*twist) return CmdTwist(session, kind, path, method);
    if (*gen) return CmdGen(session, family, params);
    if (*join) return CmdJoin(session, file1, v1, file2, v2);
    if (*genus) return CmdGenus(session, genus_file);
    if (*verify) return CmdVerify(session, identity, trials);
    if (*loopcomp) return CmdLoopcomp(session, loop_file, loop_vertex);
    if (*petrial) return CmdPetrial(session, petrial_file, petrial_edges);
  } catch (const Error& e) {
    *env.err << "error: " << e.what() << "\n";
    return ExitCodeFor(e.code());
  }
  return kExitUsage;
}

}  // namespace deltatwist::cli
