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

#ifndef RATEX_MODEL_TOKENIZE_H_
#define RATEX_MODEL_TOKENIZE_H_

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ratex/model/code_tokenizer.h"
#include "ratex/model/language_model.h"

namespace ratex::model {

struct TokenizedText {
  std::vector<VocabId> ids;
  std::vector<ByteSpan> spans;
};

// Remote backends tokenize through the bridge; vocabulary-owning backends
// use SplitCode and map unseen pieces to <unk>. Spans partition `text`.
TokenizedText TokenizeText(const LanguageModel& model, std::string_view text);

// Vocabulary text of each id. Throws kBackendError for backends without a
// vocabulary.
std::vector<std::string> TokenTexts(const LanguageModel& model,
                                    std::span<const VocabId> ids);

}  // namespace ratex::model

#endif  // RATEX_MODEL_TOKENIZE_H_
