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

#include "ratex/concepts/concept_mapper.h"

#include <map>

#include "ratex/common/errors.h"
#include "ratex/concepts/java_parser.h"
#include "ratex/concepts/pos_tagger.h"
#include "ratex/concepts/python_parser.h"

namespace ratex::concepts {

SyntaxTree Parse(std::string_view text, Language language) {
  switch (language) {
    case Language::kPython:
      return ParsePython(text);
    case Language::kJava:
      return ParseJava(text);
  }
  Fail(ErrorCode::kUnsupportedLanguage, "unsupported language");
}

std::vector<AlignedToken> ParseAndAlign(std::string_view text,
                                        std::span<const ByteSpan> tokens,
                                        Language language) {
  const SyntaxTree tree = Parse(text, language);
  return AlignTokens(tree, tokens);
}

std::string_view ProvenanceName(Provenance provenance) {
  switch (provenance) {
    case Provenance::kAst:
      return "ast";
    case Provenance::kPos:
      return "pos";
    case Provenance::kLevel:
      return "level";
    case Provenance::kFallback:
      break;
  }
  return "fallback";
}

namespace {

Provenance ParseProvenance(std::string_view name) {
  if (name == "ast") return Provenance::kAst;
  if (name == "pos") return Provenance::kPos;
  if (name == "level") return Provenance::kLevel;
  if (name == "fallback") return Provenance::kFallback;
  Fail(ErrorCode::kInvalidArgument, "unknown provenance '" + std::string(name) + "'");
}

}  // namespace

std::vector<LabeledToken> LabelTokens(std::string_view text,
                                      std::span<const ByteSpan> tokens,
                                      Language language,
                                      const Taxonomy& taxonomy) {
  const SyntaxTree tree = Parse(text, language);
  const std::vector<AlignedToken> aligned = AlignTokens(tree, tokens);

  // Natural-language words are tagged as one run per comment/string node.
  std::map<int, std::vector<size_t>> runs;
  for (size_t i = 0; i < aligned.size(); ++i) {
    if (aligned[i].natural_language) runs[tree.node(aligned[i].node).parent].push_back(i);
  }
  std::vector<std::string> pos_tags(aligned.size());
  for (const auto& [parent, members] : runs) {
    std::vector<std::string> words;
    words.reserve(members.size());
    for (size_t i : members) {
      words.emplace_back(text.substr(tokens[i].begin, tokens[i].size()));
    }
    const std::vector<std::string> tags = TagWords(words);
    for (size_t k = 0; k < members.size(); ++k) pos_tags[members[k]] = tags[k];
  }

  std::vector<LabeledToken> out;
  out.reserve(tokens.size());
  for (size_t i = 0; i < tokens.size(); ++i) {
    LabeledToken token;
    token.position = i;
    token.span = tokens[i];
    token.text = std::string(text.substr(tokens[i].begin, tokens[i].size()));
    std::optional<ConceptLabel> label;
    if (aligned[i].natural_language) {
      label = taxonomy.ForPos(pos_tags[i]);
      if (label) {
        token.provenance = Provenance::kPos;
        token.pos_tag = pos_tags[i];
      }
    } else {
      label = taxonomy.ForNode(aligned[i].node_type, aligned[i].parent_type);
      if (label) {
        token.provenance = Provenance::kAst;
        token.ast_node_type = aligned[i].node_type;
      }
    }
    token.label = label ? *label : taxonomy.fallback();
    out.push_back(std::move(token));
  }
  return out;
}

Json ToJson(const LabeledToken& token) {
  Json doc = {{"position", token.position},
              {"text", token.text},
              {"span", {token.span.begin, token.span.end}},
              {"concept", token.label.name},
              {"modality", ModalityName(token.label.modality)},
              {"provenance", ProvenanceName(token.provenance)}};
  if (token.ast_node_type) doc["node_type"] = *token.ast_node_type;
  if (token.pos_tag) doc["pos_tag"] = *token.pos_tag;
  if (token.context_level) doc["level"] = *token.context_level;
  return doc;
}

Json ToJson(std::span<const LabeledToken> tokens) {
  Json out = Json::array();
  for (const LabeledToken& token : tokens) out.push_back(ToJson(token));
  return out;
}

LabeledToken LabeledTokenFromJson(const Json& doc) {
  LabeledToken token;
  token.position = doc.at("position").get<size_t>();
  token.text = doc.at("text").get<std::string>();
  token.span = {doc.at("span").at(0).get<size_t>(), doc.at("span").at(1).get<size_t>()};
  token.label.name = doc.at("concept").get<std::string>();
  token.label.modality = ParseModality(doc.at("modality").get<std::string>());
  token.provenance = ParseProvenance(doc.at("provenance").get<std::string>());
  if (doc.contains("node_type")) token.ast_node_type = doc["node_type"].get<std::string>();
  if (doc.contains("pos_tag")) token.pos_tag = doc["pos_tag"].get<std::string>();
  if (doc.contains("level")) token.context_level = doc["level"].get<std::string>();
  return token;
}

std::vector<LabeledToken> LabeledTokensFromJson(const Json& array) {
  std::vector<LabeledToken> out;
  out.reserve(array.size());
  for (const Json& item : array) out.push_back(LabeledTokenFromJson(item));
  return out;
}

}  // namespace ratex::concepts
