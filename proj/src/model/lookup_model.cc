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

#include "ratex/model/lookup_model.h"

#include "ratex/common/errors.h"

namespace ratex::model {

LookupModel::LookupModel(Vocabulary vocab) : vocab_(std::move(vocab)) {
  if (vocab_.empty()) {
    Fail(ErrorCode::kEmptyVocabulary, "lookup model needs a vocabulary");
  }
  default_ = Distribution::Uniform(vocab_.size()).probabilities();
}

std::vector<double> LookupModel::Checked(
    std::vector<double> probabilities) const {
  if (probabilities.size() != vocab_.size()) {
    Fail(ErrorCode::kInvalidArgument,
         "probability vector of size " + std::to_string(probabilities.size()) +
             " for vocabulary of size " + std::to_string(vocab_.size()));
  }
  return Distribution(std::move(probabilities)).probabilities();
}

void LookupModel::Set(const ContextSubset& subset,
                      std::vector<double> probabilities) {
  for (const ContextEntry& entry : subset.entries()) {
    if (entry.token.value >= vocab_.size()) {
      Fail(ErrorCode::kUnknownToken, "table key token out of range");
    }
  }
  table_[subset.Key()] = Checked(std::move(probabilities));
}

void LookupModel::SetDefault(std::vector<double> probabilities) {
  default_ = Checked(std::move(probabilities));
}

Distribution LookupModel::DoEvaluate(const ContextSubset& subset) const {
  auto it = table_.find(subset.Key());
  return Distribution(it == table_.end() ? default_ : it->second);
}

Json LookupModel::ToJson() const {
  Json doc = MakeDocument("lookup_model");
  doc["vocab"] = vocab_.ToJson();
  doc["default"] = default_;
  Json table = Json::object();
  for (const auto& [key, probs] : table_) table[key] = probs;
  doc["table"] = std::move(table);
  return doc;
}

LookupModel LookupModel::FromJson(const Json& doc) {
  CheckDocument(doc, "lookup_model");
  LookupModel model(Vocabulary::FromJson(doc.at("vocab")));
  if (doc.contains("default")) {
    model.SetDefault(doc["default"].get<std::vector<double>>());
  }
  for (const auto& [key, probs] : doc.at("table").items()) {
    // Keys are validated by round-tripping through ContextSubset.
    const size_t bar = key.find('|');
    if (bar == std::string::npos) {
      Fail(ErrorCode::kSchemaMismatch, "malformed lookup key \"" + key + "\"");
    }
    std::vector<ContextEntry> entries;
    size_t start = bar + 1;
    while (start < key.size()) {
      size_t comma = key.find(',', start);
      if (comma == std::string::npos) comma = key.size();
      const std::string item = key.substr(start, comma - start);
      const size_t colon = item.find(':');
      if (colon == std::string::npos) {
        Fail(ErrorCode::kSchemaMismatch, "malformed lookup key \"" + key + "\"");
      }
      entries.push_back(
          {std::stoul(item.substr(0, colon)),
           VocabId{static_cast<uint32_t>(std::stoul(item.substr(colon + 1)))}});
      start = comma + 1;
    }
    ContextSubset subset(std::move(entries), std::stoul(key.substr(0, bar)));
    if (subset.Key() != key) {
      Fail(ErrorCode::kSchemaMismatch, "non-canonical lookup key \"" + key + "\"");
    }
    model.Set(subset, probs.get<std::vector<double>>());
  }
  return model;
}

void LookupModel::Save(const std::filesystem::path& path) const {
  WriteJsonFile(path, ToJson());
}

LookupModel LookupModel::Load(const std::filesystem::path& path) {
  return FromJson(ReadJsonFile(path));
}

}  // namespace ratex::model
