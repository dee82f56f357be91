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

#include "ratex/rationale/brute_force.h"

#include "ratex/common/errors.h"

namespace ratex::rationale {
namespace {

// Advances `combo` (strictly increasing indices < n) to the next
// lexicographic combination of the same size.
bool NextCombination(std::vector<size_t>& combo, size_t n) {
  const size_t k = combo.size();
  for (size_t i = k; i-- > 0;) {
    if (combo[i] < n - k + i) {
      ++combo[i];
      for (size_t j = i + 1; j < k; ++j) combo[j] = combo[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

std::vector<std::vector<size_t>> BruteForceRationale(
    const model::LanguageModel& model, std::span<const model::VocabId> sequence,
    size_t target_position, size_t max_context) {
  if (max_context > kMaxBruteForceContext || target_position > max_context) {
    Fail(ErrorCode::kContextTooLarge,
         "exhaustive search over " + std::to_string(target_position) +
             " predecessors exceeds the limit of " +
             std::to_string(std::min(max_context, kMaxBruteForceContext)));
  }
  if (target_position < 1 || target_position >= sequence.size()) {
    Fail(ErrorCode::kTargetOutOfRange, "target position outside sequence");
  }
  const model::VocabId target = sequence[target_position];
  for (size_t size = 0; size <= target_position; ++size) {
    std::vector<std::vector<size_t>> found;
    std::vector<size_t> combo(size);
    for (size_t i = 0; i < size; ++i) combo[i] = i;
    do {
      const auto dist = model.Evaluate(
          model::ContextSubset::Select(sequence, combo, target_position));
      if (dist.ArgMax() == target) found.push_back(combo);
    } while (size > 0 && NextCombination(combo, target_position));
    if (!found.empty()) return found;
  }
  return {};
}

}  // namespace ratex::rationale
