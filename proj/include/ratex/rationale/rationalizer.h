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

#ifndef RATEX_RATIONALE_RATIONALIZER_H_
#define RATEX_RATIONALE_RATIONALIZER_H_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "ratex/model/language_model.h"

namespace ratex::rationale {

using model::LanguageModel;
using model::VocabId;

struct RationaleStep {
  size_t added_position = 0;
  // P(target | rationale after this step).
  double probability_of_target = 0.0;
  // 1-based rank of the target under that distribution.
  size_t rank_of_target = 0;

  friend bool operator==(const RationaleStep&, const RationaleStep&) = default;
};

struct RationaleResult {
  size_t target_position = 0;
  VocabId target_token;
  std::vector<RationaleStep> steps;
  bool covered = false;
  // Coverage checks plus candidate evaluations issued for this target.
  uint64_t evaluations_used = 0;

  std::vector<size_t> Positions() const;
  friend bool operator==(const RationaleResult&, const RationaleResult&) = default;
};

struct RationalizeOptions {
  // When set, equal-probability candidates are ordered by a permutation
  // seeded from (tie_break_seed, target position) instead of by position.
  std::optional<uint64_t> tie_break_seed;
};

// Greedy rationalization of sequence[target_position]. Starting from the
// empty set, coverage (ArgMax == target) is checked before each growth step;
// otherwise every remaining predecessor is tried and the one maximizing
// P(target | set + candidate) is added. Stops when covered or when all
// predecessors are in the set (covered == false).
//
// For K steps at target position p the call count is
// (K + 1) + sum_{k=0}^{K-1} (p - k).
RationaleResult RationalizeToken(const LanguageModel& model,
                                 std::span<const VocabId> sequence,
                                 size_t target_position,
                                 const RationalizeOptions& options = {});

// One result per target, in the order given. `jobs` workers may share the
// model; results do not depend on the worker count.
std::vector<RationaleResult> RationalizeSnippet(
    const LanguageModel& model, std::span<const VocabId> sequence,
    std::span<const size_t> targets, const RationalizeOptions& options = {},
    size_t jobs = 1);

// Positions [boundary, size): the generated tokens of a snippet.
std::vector<size_t> GeneratedTargets(size_t boundary, size_t size);

// Closed-form evaluation count for a rationalization with `steps` growth
// steps at `target_position`.
uint64_t ExpectedEvaluations(size_t target_position, size_t steps);

}  // namespace ratex::rationale

#endif  // RATEX_RATIONALE_RATIONALIZER_H_
