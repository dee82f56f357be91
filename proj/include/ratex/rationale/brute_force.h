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

#ifndef RATEX_RATIONALE_BRUTE_FORCE_H_
#define RATEX_RATIONALE_BRUTE_FORCE_H_

#include <span>
#include <vector>

#include "ratex/model/language_model.h"

namespace ratex::rationale {

inline constexpr size_t kMaxBruteForceContext = 16;

// Exhaustive minimum-rationale search: enumerates predecessor subsets in
// increasing size (lexicographic within a size) and returns every covering
// subset of the smallest covering size. Empty when nothing covers. Throws
// kContextTooLarge when the target has more than `max_context` predecessors
// or max_context exceeds kMaxBruteForceContext.
std::vector<std::vector<size_t>> BruteForceRationale(
    const model::LanguageModel& model, std::span<const model::VocabId> sequence,
    size_t target_position, size_t max_context = kMaxBruteForceContext);

}  // namespace ratex::rationale

#endif  // RATEX_RATIONALE_BRUTE_FORCE_H_
