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

// Registry of seeded identity checks run by `deltatwist verify`.
//
// Trial i of identity `name` draws all of its randomness from
// Rng(seed).Split(name).Split(i), so reports do not depend on how trials
// are spread over threads.

#ifndef DELTATWIST_TOOLS_CLI_VERIFY_H_
#define DELTATWIST_TOOLS_CLI_VERIFY_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "deltatwist/random.h"
#include "json.hpp"

namespace deltatwist::cli {

struct VerifyOptions {
  int trials = 100;
  int max_n = 8;
  std::uint64_t seed = 0;
  int threads = 1;
};

struct TrialOutcome {
  bool passed = true;
  // Complete input files reproducing the failure.
  std::string counterexample;
};

// A fixed input on which the identity must fail.
struct ControlOutcome {
  std::string name;
  bool failed_as_expected = false;
  std::string detail;
};

struct Counterexample {
  int trial = 0;
  std::string inputs;
};

struct VerifyReport {
  std::string identity;
  int attempted = 0;
  int passed = 0;
  std::optional<Counterexample> counterexample;  // lowest failing trial
  std::vector<ControlOutcome> controls;
  double wall_seconds = 0;

  bool ok() const;
};

struct IdentitySpec {
  std::string name;
  std::string summary;
  // Largest --max-n the trial generator accepts.
  int max_n_cap = 8;
  std::function<TrialOutcome(Rng& rng, int trial, const VerifyOptions&)> trial;
  std::function<std::vector<ControlOutcome>()> controls;
};

const std::vector<IdentitySpec>& IdentityRegistry();

// Throws Error(kUnknownIdentity).
const IdentitySpec& FindIdentity(std::string_view name);

// Throws Error(kTooLarge) if options.max_n exceeds spec.max_n_cap and
// kBadParams for non-positive trial counts or sizes.
VerifyReport RunVerify(const IdentitySpec& spec, const VerifyOptions& options);

// Wall time is left out of both renderings so they stay reproducible.
std::string FormatReport(const VerifyReport& report);
nlohmann::json ReportToJson(const VerifyReport& report);

}  // namespace deltatwist::cli

#endif  // DELTATWIST_TOOLS_CLI_VERIFY_H_
