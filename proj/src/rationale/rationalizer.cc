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

#include "ratex/rationale/rationalizer.h"

#include <numeric>

#include "ratex/common/errors.h"
#include "ratex/common/random.h"
#include "ratex/common/thread_pool.h"

namespace ratex::rationale {

using model::ContextSubset;
using model::Distribution;

std::vector<size_t> RationaleResult::Positions() const {
  std::vector<size_t> out;
  out.reserve(steps.size());
  for (const RationaleStep& step : steps) out.push_back(step.added_position);
  return out;
}

RationaleResult RationalizeToken(const LanguageModel& model,
                                 std::span<const VocabId> sequence,
                                 size_t target_position,
                                 const RationalizeOptions& options) {
  if (target_position < 1 || target_position >= sequence.size()) {
    Fail(ErrorCode::kTargetOutOfRange,
         "target position " + std::to_string(target_position) +
             " outside [1, " + std::to_string(sequence.size()) + ")");
  }
  RationaleResult result;
  result.target_position = target_position;
  result.target_token = sequence[target_position];

  // Candidate priority: earlier entries win ties.
  std::vector<size_t> order(target_position);
  std::iota(order.begin(), order.end(), size_t{0});
  if (options.tie_break_seed) {
    Rng rng(DeriveSeed(*options.tie_break_seed, {target_position}));
    for (size_t i = order.size(); i > 1; --i) {
      std::swap(order[i - 1], order[rng.UniformIndex(i)]);
    }
  }

  std::vector<size_t> chosen;
  std::vector<bool> in_set(target_position, false);
  std::vector<size_t> trial;
  for (;;) {
    const Distribution current =
        model.Evaluate(ContextSubset::Select(sequence, chosen, target_position));
    ++result.evaluations_used;
    if (current.ArgMax() == result.target_token) {
      result.covered = true;
      break;
    }
    if (chosen.size() == target_position) break;

    size_t best = 0;
    double best_p = -1.0;
    size_t best_rank = 0;
    for (size_t candidate : order) {
      if (in_set[candidate]) continue;
      trial = chosen;
      trial.push_back(candidate);
      const Distribution dist =
          model.Evaluate(ContextSubset::Select(sequence, trial, target_position));
      ++result.evaluations_used;
      const double p = dist[result.target_token];
      if (p > best_p) {
        best = candidate;
        best_p = p;
        best_rank = dist.Rank(result.target_token);
      }
    }
    chosen.push_back(best);
    in_set[best] = true;
    result.steps.push_back({best, best_p, best_rank});
  }
  return result;
}

std::vector<RationaleResult> RationalizeSnippet(
    const LanguageModel& model, std::span<const VocabId> sequence,
    std::span<const size_t> targets, const RationalizeOptions& options,
    size_t jobs) {
  std::vector<RationaleResult> results(targets.size());
  ParallelFor(targets.size(), jobs, [&](size_t i) {
    results[i] = RationalizeToken(model, sequence, targets[i], options);
  });
  return results;
}

std::vector<size_t> GeneratedTargets(size_t boundary, size_t size) {
  std::vector<size_t> out;
  for (size_t pos = std::max<size_t>(boundary, 1); pos < size; ++pos) {
    out.push_back(pos);
  }
  return out;
}

uint64_t ExpectedEvaluations(size_t target_position, size_t steps) {
  uint64_t total = steps + 1;
  for (size_t k = 0; k < steps; ++k) total += target_position - k;
  return total;
}

}  // namespace ratex::rationale
