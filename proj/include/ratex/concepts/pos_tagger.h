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

#ifndef RATEX_CONCEPTS_POS_TAGGER_H_
#define RATEX_CONCEPTS_POS_TAGGER_H_

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ratex::concepts {

// The fixed coarse tagset.
inline constexpr std::string_view kPosNoun = "noun";
inline constexpr std::string_view kPosVerb = "verb";
inline constexpr std::string_view kPosAdjective = "adjective";
inline constexpr std::string_view kPosParticle = "particle";
inline constexpr std::string_view kPosModal = "modal";
inline constexpr std::string_view kPosConjunction = "conjunction";
inline constexpr std::string_view kPosPronoun = "pronoun";
inline constexpr std::string_view kPosDeterminer = "determiner";
inline constexpr std::string_view kPosList = "list";
inline constexpr std::string_view kPosOther = "other";

std::span<const std::string_view> PosTagset();

// Tags a run of words from one comment or string. Lookup is
// case-insensitive: a closed-class lexicon first, then an open-class
// lexicon, then suffix rules; anything left is "other". Words that are both
// nouns and verbs are resolved from the previous tag (after a determiner,
// adjective or possessive: noun; after a modal or "to": verb). Prepositions
// are tagged "particle"; numerals and list markers "list".
std::vector<std::string> TagWords(std::span<const std::string> words);

}  // namespace ratex::concepts

#endif  // RATEX_CONCEPTS_POS_TAGGER_H_
