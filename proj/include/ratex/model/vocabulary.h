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

#ifndef RATEX_MODEL_VOCABULARY_H_
#define RATEX_MODEL_VOCABULARY_H_

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "ratex/common/json_io.h"

namespace ratex::model {

// Index into a backend's fixed vocabulary.
struct VocabId {
  uint32_t value = 0;

  friend auto operator<=>(const VocabId&, const VocabId&) = default;
};

// Reserved entries present in every vocabulary built by `Vocabulary::Build`.
inline constexpr VocabId kMaskId{0};
inline constexpr VocabId kBosId{1};
inline constexpr VocabId kEosId{2};
inline constexpr VocabId kUnkId{3};
inline constexpr std::string_view kMaskText = "<mask>";
inline constexpr std::string_view kBosText = "<bos>";
inline constexpr std::string_view kEosText = "<eos>";
inline constexpr std::string_view kUnkText = "<unk>";

class Vocabulary {
 public:
  Vocabulary() = default;
  // Items are taken verbatim; duplicates are rejected.
  explicit Vocabulary(std::vector<std::string> items);

  // Reserved tokens first, then distinct corpus pieces in first-seen order.
  static Vocabulary Build(std::span<const std::vector<std::string>> corpus);

  size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }

  std::optional<VocabId> Find(std::string_view text) const;
  // Maps unseen text to <unk> when the vocabulary has one; otherwise throws
  // kUnknownToken.
  VocabId Encode(std::string_view text) const;
  const std::string& Text(VocabId id) const;

  std::optional<VocabId> eos() const { return Find(kEosText); }
  std::optional<VocabId> mask() const { return Find(kMaskText); }
  bool Reserved(VocabId id) const;

  const std::vector<std::string>& items() const { return items_; }

  Json ToJson() const;
  static Vocabulary FromJson(const Json& items);

 private:
  std::vector<std::string> items_;
  std::unordered_map<std::string, uint32_t> index_;
};

}  // namespace ratex::model

#endif  // RATEX_MODEL_VOCABULARY_H_
