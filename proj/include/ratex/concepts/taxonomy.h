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

#ifndef RATEX_CONCEPTS_TAXONOMY_H_
#define RATEX_CONCEPTS_TAXONOMY_H_

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ratex/common/json_io.h"

namespace ratex::concepts {

enum class Modality { kCode, kNaturalLanguage, kUnknown };

std::string_view ModalityName(Modality modality);
// Throws kInvalidArgument for names other than "code", "natural_language",
// "unknown".
Modality ParseModality(std::string_view name);

struct ConceptLabel {
  std::string name;
  Modality modality = Modality::kUnknown;
  friend bool operator==(const ConceptLabel&, const ConceptLabel&) = default;
};

// Data-driven mapping from syntax node types, part-of-speech tags and
// context levels to concept labels.
//
// File format:
//   {"schema": 1, "kind": "taxonomy", "id": "...",
//    "labels": {"<name>": "<modality>", ...},
//    "node_map": {"<node type>" | "<parent type>><node type>": "<label>"},
//    "pos_map": {"<tag>": "<label>"}, "level_map": {"<level>": "<label>"},
//    "fallback": "<label>"}
//
// Every map value and the fallback must be a declared label.
class Taxonomy {
 public:
  static Taxonomy FromJson(const Json& doc);
  static Taxonomy Load(const std::filesystem::path& path);
  Json ToJson() const;

  const std::string& id() const { return id_; }
  const std::vector<ConceptLabel>& labels() const { return labels_; }
  const ConceptLabel& fallback() const { return Label(fallback_); }

  // "parent>node" is consulted before "node".
  std::optional<ConceptLabel> ForNode(std::string_view node_type,
                                      std::string_view parent_type) const;
  std::optional<ConceptLabel> ForPos(std::string_view tag) const;
  std::optional<ConceptLabel> ForLevel(std::string_view level) const;
  // Throws kMissingLabel for undeclared names.
  const ConceptLabel& Label(std::string_view name) const;
  bool HasLabel(std::string_view name) const;

 private:
  std::string id_;
  std::vector<ConceptLabel> labels_;
  std::map<std::string, size_t, std::less<>> label_index_;
  std::map<std::string, std::string, std::less<>> node_map_;
  std::map<std::string, std::string, std::less<>> pos_map_;
  std::map<std::string, std::string, std::less<>> level_map_;
  std::string fallback_;
};

}  // namespace ratex::concepts

#endif  // RATEX_CONCEPTS_TAXONOMY_H_
