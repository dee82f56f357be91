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

#ifndef RATEX_MODEL_LANGUAGE_MODEL_H_
#define RATEX_MODEL_LANGUAGE_MODEL_H_

#include <atomic>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ratex/model/vocabulary.h"

namespace ratex::model {

struct ContextEntry {
  size_t position = 0;
  VocabId token;

  friend bool operator==(const ContextEntry&, const ContextEntry&) = default;
};

// The conditioning set w_r for predicting the token at `target_position`.
// Positions are strictly increasing and all precede the target.
class ContextSubset {
 public:
  // Throws kInvalidArgument if the ordering invariants do not hold.
  ContextSubset(std::vector<ContextEntry> entries, size_t target_position);

  // Subset of `sequence` at the given positions (any order, no duplicates).
  static ContextSubset Select(std::span<const VocabId> sequence,
                              std::span<const size_t> positions,
                              size_t target_position);
  // The full prefix sequence[0, target_position).
  static ContextSubset Prefix(std::span<const VocabId> sequence,
                              size_t target_position);

  const std::vector<ContextEntry>& entries() const { return entries_; }
  size_t target_position() const { return target_position_; }
  size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  // Canonical text key: "<target>|<pos>:<id>,<pos>:<id>".
  std::string Key() const;

 private:
  std::vector<ContextEntry> entries_;
  size_t target_position_ = 0;
};

// A full next-token distribution over a backend's vocabulary.
class Distribution {
 public:
  // Throws kBackendError unless entries are finite, non-negative and sum to
  // one within 1e-6.
  explicit Distribution(std::vector<double> probabilities);
  // Exponentiates and renormalizes a log-probability vector.
  static Distribution FromLogProbs(std::span<const double> log_probs);
  static Distribution Uniform(size_t size);

  size_t size() const { return probabilities_.size(); }
  double operator[](VocabId id) const { return probabilities_[id.value]; }
  const std::vector<double>& probabilities() const { return probabilities_; }

  // Lowest id wins ties.
  VocabId ArgMax() const;
  // 1-based rank of `id` under the ArgMax ordering.
  size_t Rank(VocabId id) const;

 private:
  std::vector<double> probabilities_;
};

// Subset-conditional language model P(w_t | w_r). Implementations are
// immutable after construction and must allow concurrent Evaluate calls.
class LanguageModel {
 public:
  LanguageModel() = default;
  // Copies start with a fresh call counter.
  LanguageModel(const LanguageModel&) {}
  LanguageModel& operator=(const LanguageModel&) { return *this; }
  virtual ~LanguageModel() = default;

  // Validates the subset tokens against the vocabulary size, increments the
  // call counter and returns the backend distribution.
  Distribution Evaluate(const ContextSubset& subset) const;

  virtual size_t vocab_size() const = 0;
  virtual std::string name() const = 0;
  // Present for backends that own a token vocabulary.
  virtual const Vocabulary* vocabulary() const { return nullptr; }
  virtual std::optional<VocabId> eos() const;

  uint64_t evaluations() const { return evaluations_.load(); }
  void ResetEvaluations() const { evaluations_.store(0); }

 protected:
  virtual Distribution DoEvaluate(const ContextSubset& subset) const = 0;

 private:
  mutable std::atomic<uint64_t> evaluations_{0};
};

// Forwards to another model and keeps its own independent call count.
class CountingModel : public LanguageModel {
 public:
  explicit CountingModel(const LanguageModel& inner) : inner_(inner) {}

  size_t vocab_size() const override { return inner_.vocab_size(); }
  std::string name() const override { return "counting(" + inner_.name() + ")"; }
  const Vocabulary* vocabulary() const override { return inner_.vocabulary(); }
  std::optional<VocabId> eos() const override { return inner_.eos(); }

 protected:
  Distribution DoEvaluate(const ContextSubset& subset) const override {
    return inner_.Evaluate(subset);
  }

 private:
  const LanguageModel& inner_;
};

}  // namespace ratex::model

#endif  // RATEX_MODEL_LANGUAGE_MODEL_H_
