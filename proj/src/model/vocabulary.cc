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

#include "ratex/model/vocabulary.h"

#include "ratex/common/errors.h"

namespace ratex::model {

Vocabulary::Vocabulary(std::vector<std::string> items)
    : items_(std::move(items)) {
  index_.reserve(items_.size());
  for (uint32_t i = 0; i < items_.size(); ++i) {
    if (!index_.emplace(items_[i], i).second) {
      Fail(ErrorCode::kInvalidArgument,
           "duplicate vocabulary entry \"" + items_[i] + "\"");
    }
  }
}

Vocabulary Vocabulary::Build(std::span<const std::vector<std::string>> corpus) {
  std::vector<std::string> items = {std::string(kMaskText),
                                    std::string(kBosText),
                                    std::string(kEosText),
                                    std::string(kUnkText)};
  std::unordered_map<std::string, bool> seen;
  for (const auto& item : items) seen.emplace(item, true);
  for (const auto& sequence : corpus) {
    for (const auto& piece : sequence) {
      if (seen.emplace(piece, true).second) items.push_back(piece);
    }
  }
  return Vocabulary(std::move(items));
}

std::optional<VocabId> Vocabulary::Find(std::string_view text) const {
  auto it = index_.find(std::string(text));
  if (it == index_.end()) return std::nullopt;
  return VocabId{it->second};
}

VocabId Vocabulary::Encode(std::string_view text) const {
  if (auto id = Find(text)) return *id;
  if (auto unk = Find(kUnkText)) return *unk;
  Fail(ErrorCode::kUnknownToken,
       "\"" + std::string(text) + "\" is not in the vocabulary");
}

const std::string& Vocabulary::Text(VocabId id) const {
  if (id.value >= items_.size()) {
    Fail(ErrorCode::kUnknownToken,
         "vocabulary id " + std::to_string(id.value) + " out of range " +
             std::to_string(items_.size()));
  }
  return items_[id.value];
}

bool Vocabulary::Reserved(VocabId id) const {
  if (id.value >= items_.size()) return false;
  const std::string& text = items_[id.value];
  return text == kMaskText || text == kBosText || text == kEosText ||
         text == kUnkText;
}

Json Vocabulary::ToJson() const { return Json(items_); }

Vocabulary Vocabulary::FromJson(const Json& items) {
  return Vocabulary(items.get<std::vector<std::string>>());
}

}  // namespace ratex::model
