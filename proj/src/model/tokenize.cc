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

#include "ratex/model/tokenize.h"

#include "ratex/common/errors.h"
#include "ratex/model/remote_model.h"

namespace ratex::model {

TokenizedText TokenizeText(const LanguageModel& model, std::string_view text) {
  TokenizedText out;
  if (const auto* remote = dynamic_cast<const RemoteModel*>(&model)) {
    protocol::TokenizeResult result = remote->Tokenize(text);
    out.ids = std::move(result.ids);
    out.spans = std::move(result.spans);
    return out;
  }
  const Vocabulary* vocab = model.vocabulary();
  if (vocab == nullptr) {
    Fail(ErrorCode::kBackendError, model.name() + " cannot tokenize text");
  }
  for (const TextPiece& piece : SplitCode(text)) {
    out.ids.push_back(vocab->Encode(piece.text));
    out.spans.push_back(piece.span);
  }
  return out;
}

std::vector<std::string> TokenTexts(const LanguageModel& model,
                                    std::span<const VocabId> ids) {
  const Vocabulary* vocab = model.vocabulary();
  if (vocab == nullptr) {
    Fail(ErrorCode::kBackendError, model.name() + " has no vocabulary to detokenize with");
  }
  std::vector<std::string> out;
  out.reserve(ids.size());
  for (VocabId id : ids) out.push_back(vocab->Text(id));
  return out;
}

}  // namespace ratex::model
