// Copyright 2026 The Ratex Authors.
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

#ifndef RATEX_COMMON_RANDOM_H_
#define RATEX_COMMON_RANDOM_H_

#include <cstdint>
#include <initializer_list>
#include <random>
#include <string_view>

namespace ratex {

uint64_t SplitMix64(uint64_t x);

// FNV-1a, used to turn names (cell keys, snippet ids) into seed streams.
uint64_t HashString(std::string_view text);

// Counter-based seed expansion: the same (base, path) always yields the same
// stream seed regardless of the order in which streams are requested.
uint64_t DeriveSeed(uint64_t base, std::initializer_list<uint64_t> path);

// Deterministic RNG. Draw helpers avoid std::*_distribution so that streams
// are identical across standard library implementations.
class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}

  uint64_t Next() { return engine_(); }
  // Uniform in [0, 1).
  double Uniform01();
  // Uniform integer in [0, n); n must be positive.
  uint64_t UniformIndex(uint64_t n);
  // Uniform integer in [lo, hi].
  int64_t UniformInt(int64_t lo, int64_t hi);
  bool Bernoulli(double p) { return Uniform01() < p; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace ratex

#endif  // RATEX_COMMON_RANDOM_H_
