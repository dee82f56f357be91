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

#include "ratex/model/decode.h"

#include "ratex/common/errors.h"

namespace ratex::model {

std::vector<VocabId> GreedyDecode(const LanguageModel& model,
                                  std::span<const VocabId> prompt,
                                  size_t max_new) {
  if (prompt.empty()) Fail(ErrorCode::kInvalidArgument, "empty prompt");
  std::vector<VocabId> sequence(prompt.begin(), prompt.end());
  const std::optional<VocabId> eos = model.eos();
  for (size_t step = 0; step < max_new; ++step) {
    const VocabId next =
        model.Evaluate(ContextSubset::Prefix(sequence, sequence.size())).ArgMax();
    if (eos && next == *eos) break;
    sequence.push_back(next);
  }
  return sequence;
}

}  // namespace ratex::model
