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

#include "ratex/model/language_model.h"

#include <algorithm>
#include <cmath>

#include "ratex/common/errors.h"

namespace ratex::model {

ContextSubset::ContextSubset(std::vector<ContextEntry> entries,
                             size_t target_position)
    : entries_(std::move(entries)), target_position_(target_position) {
  for (size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i].position >= target_position_) {
      Fail(ErrorCode::kInvalidArgument,
           "context position " + std::to_string(entries_[i].position) +
               " does not precede target " + std::to_string(target_position_));
    }
    if (i > 0 && entries_[i - 1].position >= entries_[i].position) {
      Fail(ErrorCode::kInvalidArgument,
           "context positions must be strictly increasing");
    }
  }
}

ContextSubset ContextSubset::Select(std::span<const VocabId> sequence,
                                    std::span<const size_t> positions,
                                    size_t target_position) {
  std::vector<size_t> sorted(positions.begin(), positions.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<ContextEntry> entries;
  entries.reserve(sorted.size());
  for (size_t pos : sorted) {
    if (pos >= sequence.size()) {
      Fail(ErrorCode::kInvalidArgument,
           "position " + std::to_string(pos) + " beyond sequence");
    }
    entries.push_back({pos, sequence[pos]});
  }
  return ContextSubset(std::move(entries), target_position);
}

ContextSubset ContextSubset::Prefix(std::span<const VocabId> sequence,
                                    size_t target_position) {
  if (target_position > sequence.size()) {
    Fail(ErrorCode::kInvalidArgument, "prefix longer than sequence");
  }
  std::vector<ContextEntry> entries;
  entries.reserve(target_position);
  for (size_t pos = 0; pos < target_position; ++pos) {
    entries.push_back({pos, sequence[pos]});
  }
  return ContextSubset(std::move(entries), target_position);
}

std::string ContextSubset::Key() const {
  std::string key = std::to_string(target_position_) + "|";
  for (size_t i = 0; i < entries_.size(); ++i) {
    if (i > 0) key += ',';
    key += std::to_string(entries_[i].position);
    key += ':';
    key += std::to_string(entries_[i].token.value);
  }
  return key;
}

Distribution::Distribution(std::vector<double> probabilities)
    : probabilities_(std::move(probabilities)) {
  if (probabilities_.empty()) {
    Fail(ErrorCode::kEmptyVocabulary, "distribution over an empty vocabulary");
  }
  double total = 0.0;
  for (double p : probabilities_) {
    if (!std::isfinite(p) || p < 0.0) {
      Fail(ErrorCode::kBackendError,
           "distribution entry is negative or not finite");
    }
    total += p;
  }
  if (std::abs(total - 1.0) > 1e-6) {
    Fail(ErrorCode::kBackendError,
         "distribution sums to " + std::to_string(total));
  }
}

Distribution Distribution::FromLogProbs(std::span<const double> log_probs) {
  if (log_probs.empty()) {
    Fail(ErrorCode::kEmptyVocabulary, "empty log-probability vector");
  }
  double max_lp = -INFINITY;
  for (double lp : log_probs) {
    if (std::isnan(lp) || lp == INFINITY) {
      Fail(ErrorCode::kBackendError, "log-probability is NaN or +inf");
    }
    max_lp = std::max(max_lp, lp);
  }
  if (!std::isfinite(max_lp)) {
    Fail(ErrorCode::kBackendError, "all log-probabilities are -inf");
  }
  std::vector<double> probs(log_probs.size());
  double total = 0.0;
  for (size_t i = 0; i < log_probs.size(); ++i) {
    probs[i] = std::exp(log_probs[i] - max_lp);
    total += probs[i];
  }
  for (double& p : probs) p /= total;
  return Distribution(std::move(probs));
}

Distribution Distribution::Uniform(size_t size) {
  if (size == 0) {
    Fail(ErrorCode::kEmptyVocabulary, "uniform distribution of size 0");
  }
  return Distribution(std::vector<double>(size, 1.0 / static_cast<double>(size)));
}

VocabId Distribution::ArgMax() const {
  uint32_t best = 0;
  for (uint32_t i = 1; i < probabilities_.size(); ++i) {
    if (probabilities_[i] > probabilities_[best]) best = i;
  }
  return VocabId{best};
}

size_t Distribution::Rank(VocabId id) const {
  const double p = probabilities_.at(id.value);
  size_t rank = 1;
  for (uint32_t i = 0; i < probabilities_.size(); ++i) {
    if (probabilities_[i] > p || (probabilities_[i] == p && i < id.value)) {
      ++rank;
    }
  }
  return rank;
}

Distribution LanguageModel::Evaluate(const ContextSubset& subset) const {
  const size_t vocab = vocab_size();
  if (vocab == 0) {
    Fail(ErrorCode::kEmptyVocabulary, name() + " has no vocabulary");
  }
  for (const ContextEntry& entry : subset.entries()) {
    if (entry.token.value >= vocab) {
      Fail(ErrorCode::kUnknownToken,
           "token id " + std::to_string(entry.token.value) +
               " out of range for vocabulary of size " + std::to_string(vocab));
    }
  }
  evaluations_.fetch_add(1);
  Distribution out = DoEvaluate(subset);
  if (out.size() != vocab) {
    Fail(ErrorCode::kBackendError,
         name() + " returned a distribution of size " +
             std::to_string(out.size()) + ", expected " + std::to_string(vocab));
  }
  return out;
}

std::optional<VocabId> LanguageModel::eos() const {
  if (const Vocabulary* vocab = vocabulary()) return vocab->eos();
  return std::nullopt;
}

}  // namespace ratex::model
