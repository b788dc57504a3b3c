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

#ifndef DELTATWIST_RANDOM_H_
#define DELTATWIST_RANDOM_H_

#include <cstdint>
#include <random>
#include <string_view>

namespace deltatwist {

// Seeded generator with named, reproducible sub-streams. All sampling helpers
// are written out explicitly (no std:: distributions) so a seed produces the
// same values with every standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  // Independent stream derived from this generator's seed and `name`. Does
  // not advance *this.
  Rng Split(std::string_view name) const;
  Rng Split(std::uint64_t index) const;

  std::uint64_t seed() const { return seed_; }

  std::uint64_t Next() { return engine_(); }
  // Uniform in [0, bound); bound must be positive.
  std::uint64_t Below(std::uint64_t bound);
  // Uniform in [lo, hi].
  int Between(int lo, int hi);
  // Uniform in [0, 1).
  double Unit();
  bool Bernoulli(double p) { return Unit() < p; }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

std::uint64_t SplitMix64(std::uint64_t x);

}  // namespace deltatwist

#endif  // DELTATWIST_RANDOM_H_
