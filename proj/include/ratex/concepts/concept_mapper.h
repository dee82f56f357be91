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

#ifndef RATEX_CONCEPTS_CONCEPT_MAPPER_H_
#define RATEX_CONCEPTS_CONCEPT_MAPPER_H_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ratex/common/json_io.h"
#include "ratex/concepts/syntax_tree.h"
#include "ratex/concepts/taxonomy.h"

namespace ratex::concepts {

SyntaxTree Parse(std::string_view text, Language language);

// Aligns token spans with the syntax tree of `text`.
std::vector<AlignedToken> ParseAndAlign(std::string_view text,
                                        std::span<const ByteSpan> tokens,
                                        Language language);

enum class Provenance { kAst, kPos, kLevel, kFallback };

std::string_view ProvenanceName(Provenance provenance);

struct LabeledToken {
  size_t position = 0;
  std::string text;
  ByteSpan span;
  ConceptLabel label;
  Provenance provenance = Provenance::kFallback;
  // Exactly the field matching `provenance` is set; fallback sets none.
  std::optional<std::string> ast_node_type;
  std::optional<std::string> pos_tag;
  std::optional<std::string> context_level;
  friend bool operator==(const LabeledToken&, const LabeledToken&) = default;
};

// One label per token. Natural-language words (inside comments and strings)
// are tagged per enclosing comment/string and looked up in the pos map; all
// other tokens use the node map with their aligned node and parent types.
// Unmapped tokens receive the taxonomy fallback.
std::vector<LabeledToken> LabelTokens(std::string_view text,
                                      std::span<const ByteSpan> tokens,
                                      Language language,
                                      const Taxonomy& taxonomy);

// {"position","text","span":[b,e],"concept","modality","provenance",
//  "node_type"|"pos_tag"|"level"}
Json ToJson(const LabeledToken& token);
Json ToJson(std::span<const LabeledToken> tokens);
LabeledToken LabeledTokenFromJson(const Json& doc);
std::vector<LabeledToken> LabeledTokensFromJson(const Json& array);

}  // namespace ratex::concepts

#endif  // RATEX_CONCEPTS_CONCEPT_MAPPER_H_
