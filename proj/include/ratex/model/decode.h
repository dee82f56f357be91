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

#ifndef RATEX_MODEL_DECODE_H_
#define RATEX_MODEL_DECODE_H_

#include <span>
#include <vector>

#include "ratex/model/language_model.h"

namespace ratex::model {

// Returns prompt ++ generated, where each generated token is the ArgMax of
// the model over the full prefix. Stops after `max_new` tokens or when the
// model's end-of-sequence token is produced (the EOS itself is dropped).
std::vector<VocabId> GreedyDecode(const LanguageModel& model,
                                  std::span<const VocabId> prompt,
                                  size_t max_new);

}  // namespace ratex::model

#endif  // RATEX_MODEL_DECODE_H_
