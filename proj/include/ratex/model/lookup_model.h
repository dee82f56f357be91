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

#ifndef RATEX_MODEL_LOOKUP_MODEL_H_
#define RATEX_MODEL_LOOKUP_MODEL_H_

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "ratex/common/json_io.h"
#include "ratex/model/language_model.h"

namespace ratex::model {

// Table-driven backend: each canonical subset key maps to an explicit
// probability vector. Subsets missing from the table get the default
// distribution (uniform unless set). Used as the ground-truth oracle in
// rationalizer tests.
class LookupModel : public LanguageModel {
 public:
  explicit LookupModel(Vocabulary vocab);

  void Set(const ContextSubset& subset, std::vector<double> probabilities);
  void SetDefault(std::vector<double> probabilities);

  size_t vocab_size() const override { return vocab_.size(); }
  std::string name() const override { return "lookup"; }
  const Vocabulary* vocabulary() const override { return &vocab_; }

  size_t table_size() const { return table_.size(); }

  Json ToJson() const;
  static LookupModel FromJson(const Json& doc);
  void Save(const std::filesystem::path& path) const;
  static LookupModel Load(const std::filesystem::path& path);

 protected:
  Distribution DoEvaluate(const ContextSubset& subset) const override;

 private:
  std::vector<double> Checked(std::vector<double> probabilities) const;

  Vocabulary vocab_;
  std::vector<double> default_;
  std::map<std::string, std::vector<double>> table_;
};

}  // namespace ratex::model

#endif  // RATEX_MODEL_LOOKUP_MODEL_H_
