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

#ifndef RATEX_MODEL_NGRAM_MODEL_H_
#define RATEX_MODEL_NGRAM_MODEL_H_

#include <cstdint>
#include <filesystem>
#include <map>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "ratex/common/json_io.h"
#include "ratex/model/language_model.h"

namespace ratex::model {

struct NgramOptions {
  int order = 4;
  // Probability that a training context slot is replaced by <mask>.
  double dropout_rate = 0.5;
  // Add-alpha smoothing constant.
  double alpha = 0.1;
  uint64_t seed = 0;
  // Number of dropout-augmented passes over the corpus.
  int passes = 16;
};

// N-gram model trained with word dropout so that arbitrary context subsets
// are in-distribution. The conditioning context for position t is the
// order-1 slots before t; a slot holds the token when its position is in the
// subset, <mask> when absent, and <bos> before the sequence start.
//
// Unseen contexts back off by masking the oldest observed slot until a seen
// context remains; if none does, the distribution is uniform over the
// support. The support excludes <mask> and <bos>.
class MaskedNgramModel : public LanguageModel {
 public:
  // `corpus` holds id sequences over `vocab`; callers append <eos> if they
  // want end-of-sequence statistics.
  static MaskedNgramModel Train(std::span<const std::vector<VocabId>> corpus,
                                Vocabulary vocab, const NgramOptions& options);
  // Splits each source with SplitCode, builds the vocabulary and appends
  // <eos> to every sequence.
  static MaskedNgramModel TrainFromTexts(std::span<const std::string> sources,
                                         const NgramOptions& options);

  size_t vocab_size() const override { return vocab_.size(); }
  std::string name() const override;
  const Vocabulary* vocabulary() const override { return &vocab_; }

  const NgramOptions& options() const { return options_; }
  // Count of `next` after the exact slot context (no backoff); test hook.
  uint64_t Count(std::span<const VocabId> context, VocabId next) const;
  uint64_t ContextTotal(std::span<const VocabId> context) const;
  size_t context_count() const { return table_.size(); }

  Json ToJson() const;
  static MaskedNgramModel FromJson(const Json& doc);
  void Save(const std::filesystem::path& path) const;
  static MaskedNgramModel Load(const std::filesystem::path& path);

 protected:
  Distribution DoEvaluate(const ContextSubset& subset) const override;

 private:
  struct Counts {
    uint64_t total = 0;
    std::map<uint32_t, uint64_t> next;
  };

  MaskedNgramModel(Vocabulary vocab, const NgramOptions& options);
  static std::string PackKey(std::span<const VocabId> context);
  void Add(std::span<const VocabId> context, VocabId next, uint64_t count);

  Vocabulary vocab_;
  NgramOptions options_;
  std::unordered_map<std::string, Counts> table_;
};

}  // namespace ratex::model

#endif  // RATEX_MODEL_NGRAM_MODEL_H_
