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

#include "ratex/concepts/taxonomy.h"

#include "ratex/common/errors.h"

namespace ratex::concepts {

std::string_view ModalityName(Modality modality) {
  switch (modality) {
    case Modality::kCode:
      return "code";
    case Modality::kNaturalLanguage:
      return "natural_language";
    case Modality::kUnknown:
      break;
  }
  return "unknown";
}

Modality ParseModality(std::string_view name) {
  if (name == "code") return Modality::kCode;
  if (name == "natural_language") return Modality::kNaturalLanguage;
  if (name == "unknown") return Modality::kUnknown;
  Fail(ErrorCode::kInvalidArgument, "unknown modality '" + std::string(name) + "'");
}

namespace {

std::map<std::string, std::string, std::less<>> ReadMap(const Json& doc,
                                                        const char* key) {
  std::map<std::string, std::string, std::less<>> out;
  if (!doc.contains(key)) return out;
  if (!doc.at(key).is_object()) {
    Fail(ErrorCode::kInvalidArgument, std::string("taxonomy: '") + key + "' must be an object");
  }
  for (const auto& [k, v] : doc.at(key).items()) out.emplace(k, v.get<std::string>());
  return out;
}

Json WriteMap(const std::map<std::string, std::string, std::less<>>& map) {
  Json out = Json::object();
  for (const auto& [k, v] : map) out[k] = v;
  return out;
}

}  // namespace

Taxonomy Taxonomy::FromJson(const Json& doc) {
  CheckDocument(doc, "taxonomy");
  Taxonomy t;
  t.id_ = doc.at("id").get<std::string>();
  for (const auto& [name, modality] : doc.at("labels").items()) {
    t.label_index_.emplace(name, t.labels_.size());
    t.labels_.push_back({name, ParseModality(modality.get<std::string>())});
  }
  t.node_map_ = ReadMap(doc, "node_map");
  t.pos_map_ = ReadMap(doc, "pos_map");
  t.level_map_ = ReadMap(doc, "level_map");
  t.fallback_ = doc.at("fallback").get<std::string>();
  if (!t.HasLabel(t.fallback_)) {
    Fail(ErrorCode::kMissingLabel, "taxonomy fallback '" + t.fallback_ + "' is not a label");
  }
  for (const auto* map : {&t.node_map_, &t.pos_map_, &t.level_map_}) {
    for (const auto& [key, label] : *map) {
      if (!t.HasLabel(label)) {
        Fail(ErrorCode::kMissingLabel,
             "taxonomy maps '" + key + "' to undeclared label '" + label + "'");
      }
    }
  }
  return t;
}

Taxonomy Taxonomy::Load(const std::filesystem::path& path) {
  return FromJson(ReadJsonFile(path));
}

Json Taxonomy::ToJson() const {
  Json doc = MakeDocument("taxonomy");
  doc["id"] = id_;
  Json labels = Json::object();
  for (const ConceptLabel& label : labels_) labels[label.name] = ModalityName(label.modality);
  doc["labels"] = labels;
  doc["node_map"] = WriteMap(node_map_);
  doc["pos_map"] = WriteMap(pos_map_);
  doc["level_map"] = WriteMap(level_map_);
  doc["fallback"] = fallback_;
  return doc;
}

std::optional<ConceptLabel> Taxonomy::ForNode(std::string_view node_type,
                                              std::string_view parent_type) const {
  if (!parent_type.empty()) {
    std::string qualified(parent_type);
    qualified += '>';
    qualified += node_type;
    if (auto it = node_map_.find(qualified); it != node_map_.end()) return Label(it->second);
  }
  if (auto it = node_map_.find(node_type); it != node_map_.end()) return Label(it->second);
  return std::nullopt;
}

std::optional<ConceptLabel> Taxonomy::ForPos(std::string_view tag) const {
  if (auto it = pos_map_.find(tag); it != pos_map_.end()) return Label(it->second);
  return std::nullopt;
}

std::optional<ConceptLabel> Taxonomy::ForLevel(std::string_view level) const {
  if (auto it = level_map_.find(level); it != level_map_.end()) return Label(it->second);
  return std::nullopt;
}

const ConceptLabel& Taxonomy::Label(std::string_view name) const {
  auto it = label_index_.find(name);
  if (it == label_index_.end()) {
    Fail(ErrorCode::kMissingLabel, "label '" + std::string(name) + "' not in taxonomy " + id_);
  }
  return labels_[it->second];
}

bool Taxonomy::HasLabel(std::string_view name) const {
  return label_index_.find(name) != label_index_.end();
}

}  // namespace ratex::concepts
