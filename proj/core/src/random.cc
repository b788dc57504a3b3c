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

#include "deltatwist/random.h"

namespace deltatwist {

std::uint64_t SplitMix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Rng::Rng(std::uint64_t seed) : seed_(seed), engine_(SplitMix64(seed)) {}

Rng Rng::Split(std::string_view name) const {
  // FNV-1a over the name, then mixed with our seed.
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : name) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return Rng(SplitMix64(seed_ ^ SplitMix64(h)));
}

Rng Rng::Split(std::uint64_t index) const {
  return Rng(SplitMix64(seed_ + SplitMix64(index + 0x5851f42d4c957f2dULL)));
}

std::uint64_t Rng::Below(std::uint64_t bound) {
  // Rejection sampling removes modulo bias.
  const std::uint64_t limit = bound * (~std::uint64_t{0} / bound);
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % bound;
}

int Rng::Between(int lo, int hi) {
  return lo + static_cast<int>(Below(static_cast<std::uint64_t>(hi - lo) + 1));
}

double Rng::Unit() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

}  // namespace deltatwist
