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

#include "ratex/model/ngram_model.h"

#include <algorithm>
#include <cstring>

#include "ratex/common/errors.h"
#include "ratex/common/random.h"
#include "ratex/model/code_tokenizer.h"

namespace ratex::model {

MaskedNgramModel::MaskedNgramModel(Vocabulary vocab,
                                   const NgramOptions& options)
    : vocab_(std::move(vocab)), options_(options) {
  if (options_.order < 1) {
    Fail(ErrorCode::kInvalidArgument, "n-gram order must be at least 1");
  }
  if (!(options_.dropout_rate >= 0.0 && options_.dropout_rate < 1.0)) {
    Fail(ErrorCode::kInvalidArgument, "dropout rate must be in [0, 1)");
  }
  if (!(options_.alpha > 0.0)) {
    Fail(ErrorCode::kInvalidArgument, "smoothing alpha must be positive");
  }
  if (options_.passes < 1) {
    Fail(ErrorCode::kInvalidArgument, "passes must be at least 1");
  }
  if (vocab_.Find(kMaskText) != kMaskId || vocab_.Find(kBosText) != kBosId ||
      vocab_.Find(kEosText) != kEosId || vocab_.Find(kUnkText) != kUnkId) {
    Fail(ErrorCode::kInvalidArgument,
         "n-gram vocabulary must start with the reserved tokens");
  }
}

std::string MaskedNgramModel::PackKey(std::span<const VocabId> context) {
  std::string key(context.size() * sizeof(uint32_t), '\0');
  for (size_t i = 0; i < context.size(); ++i) {
    std::memcpy(key.data() + i * sizeof(uint32_t), &context[i].value,
                sizeof(uint32_t));
  }
  return key;
}

void MaskedNgramModel::Add(std::span<const VocabId> context, VocabId next,
                           uint64_t count) {
  Counts& counts = table_[PackKey(context)];
  counts.total += count;
  counts.next[next.value] += count;
}

MaskedNgramModel MaskedNgramModel::Train(
    std::span<const std::vector<VocabId>> corpus, Vocabulary vocab,
    const NgramOptions& options) {
  if (corpus.empty()) Fail(ErrorCode::kEmptyCorpus, "no training sequences");
  size_t tokens = 0;
  for (const auto& seq : corpus) tokens += seq.size();
  if (tokens == 0) Fail(ErrorCode::kEmptyCorpus, "training corpus has no tokens");

  MaskedNgramModel model(std::move(vocab), options);
  const size_t slots = static_cast<size_t>(options.order - 1);
  std::vector<VocabId> context(slots);
  for (int pass = 0; pass < options.passes; ++pass) {
    for (size_t s = 0; s < corpus.size(); ++s) {
      const auto& seq = corpus[s];
      Rng rng(DeriveSeed(options.seed, {static_cast<uint64_t>(pass), s}));
      for (size_t t = 0; t < seq.size(); ++t) {
        if (seq[t].value >= model.vocab_.size()) {
          Fail(ErrorCode::kUnknownToken, "training token out of range");
        }
        for (size_t i = 0; i < slots; ++i) {
          const ptrdiff_t pos = static_cast<ptrdiff_t>(t) -
                                static_cast<ptrdiff_t>(slots) +
                                static_cast<ptrdiff_t>(i);
          if (pos < 0) {
            context[i] = kBosId;
          } else {
            context[i] = rng.Bernoulli(options.dropout_rate)
                             ? kMaskId
                             : seq[static_cast<size_t>(pos)];
          }
        }
        model.Add(context, seq[t], 1);
      }
    }
  }
  return model;
}

MaskedNgramModel MaskedNgramModel::TrainFromTexts(
    std::span<const std::string> sources, const NgramOptions& options) {
  std::vector<std::vector<std::string>> pieces;
  pieces.reserve(sources.size());
  for (const std::string& source : sources) {
    std::vector<std::string> seq;
    for (TextPiece& piece : SplitCode(source)) seq.push_back(std::move(piece.text));
    pieces.push_back(std::move(seq));
  }
  Vocabulary vocab = Vocabulary::Build(pieces);
  std::vector<std::vector<VocabId>> corpus;
  corpus.reserve(pieces.size());
  for (const auto& seq : pieces) {
    std::vector<VocabId> ids;
    ids.reserve(seq.size() + 1);
    for (const std::string& piece : seq) ids.push_back(vocab.Encode(piece));
    ids.push_back(kEosId);
    corpus.push_back(std::move(ids));
  }
  return Train(corpus, std::move(vocab), options);
}

std::string MaskedNgramModel::name() const {
  return "masked-ngram(order=" + std::to_string(options_.order) + ")";
}

uint64_t MaskedNgramModel::Count(std::span<const VocabId> context,
                                 VocabId next) const {
  auto it = table_.find(PackKey(context));
  if (it == table_.end()) return 0;
  auto jt = it->second.next.find(next.value);
  return jt == it->second.next.end() ? 0 : jt->second;
}

uint64_t MaskedNgramModel::ContextTotal(std::span<const VocabId> context) const {
  auto it = table_.find(PackKey(context));
  return it == table_.end() ? 0 : it->second.total;
}

Distribution MaskedNgramModel::DoEvaluate(const ContextSubset& subset) const {
  const size_t slots = static_cast<size_t>(options_.order - 1);
  const size_t target = subset.target_position();
  std::vector<VocabId> context(slots, kMaskId);
  const auto& entries = subset.entries();
  for (size_t i = 0; i < slots; ++i) {
    const ptrdiff_t pos = static_cast<ptrdiff_t>(target) -
                          static_cast<ptrdiff_t>(slots) +
                          static_cast<ptrdiff_t>(i);
    if (pos < 0) {
      context[i] = kBosId;
      continue;
    }
    auto it = std::lower_bound(
        entries.begin(), entries.end(), static_cast<size_t>(pos),
        [](const ContextEntry& e, size_t p) { return e.position < p; });
    if (it != entries.end() && it->position == static_cast<size_t>(pos)) {
      context[i] = it->token;
    }
  }

  const Counts* counts = nullptr;
  for (;;) {
    auto it = table_.find(PackKey(context));
    if (it != table_.end()) {
      counts = &it->second;
      break;
    }
    auto oldest = std::find_if(context.begin(), context.end(), [](VocabId id) {
      return id != kMaskId && id != kBosId;
    });
    if (oldest == context.end()) break;
    *oldest = kMaskId;
  }

  const size_t vocab = vocab_.size();
  const double support = static_cast<double>(vocab - 2);
  const double total = counts ? static_cast<double>(counts->total) : 0.0;
  const double denom = total + options_.alpha * support;
  std::vector<double> probs(vocab, options_.alpha / denom);
  probs[kMaskId.value] = 0.0;
  probs[kBosId.value] = 0.0;
  if (counts) {
    for (const auto& [id, count] : counts->next) {
      probs[id] = (static_cast<double>(count) + options_.alpha) / denom;
    }
  }
  return Distribution(std::move(probs));
}

Json MaskedNgramModel::ToJson() const {
  Json doc = MakeDocument("masked_ngram");
  doc["order"] = options_.order;
  doc["alpha"] = options_.alpha;
  doc["dropout_rate"] = options_.dropout_rate;
  doc["seed"] = options_.seed;
  doc["passes"] = options_.passes;
  doc["vocab"] = vocab_.ToJson();

  std::vector<std::pair<std::vector<uint32_t>, const Counts*>> rows;
  rows.reserve(table_.size());
  for (const auto& [key, counts] : table_) {
    std::vector<uint32_t> ctx(key.size() / sizeof(uint32_t));
    std::memcpy(ctx.data(), key.data(), key.size());
    rows.emplace_back(std::move(ctx), &counts);
  }
  std::sort(rows.begin(), rows.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  Json contexts = Json::array();
  for (const auto& [ctx, counts] : rows) {
    Json next = Json::array();
    for (const auto& [id, count] : counts->next) next.push_back({id, count});
    contexts.push_back({{"context", ctx}, {"next", std::move(next)}});
  }
  doc["contexts"] = std::move(contexts);
  return doc;
}

MaskedNgramModel MaskedNgramModel::FromJson(const Json& doc) {
  CheckDocument(doc, "masked_ngram");
  NgramOptions options;
  options.order = doc.at("order").get<int>();
  options.alpha = doc.at("alpha").get<double>();
  options.dropout_rate = doc.at("dropout_rate").get<double>();
  options.seed = doc.at("seed").get<uint64_t>();
  options.passes = doc.value("passes", 1);
  MaskedNgramModel model(Vocabulary::FromJson(doc.at("vocab")), options);
  const size_t slots = static_cast<size_t>(options.order - 1);
  for (const Json& row : doc.at("contexts")) {
    std::vector<VocabId> ctx;
    for (uint32_t id : row.at("context").get<std::vector<uint32_t>>()) {
      ctx.push_back(VocabId{id});
    }
    if (ctx.size() != slots) {
      Fail(ErrorCode::kSchemaMismatch, "context width does not match order");
    }
    for (const Json& pair : row.at("next")) {
      const VocabId next{pair.at(0).get<uint32_t>()};
      if (next.value >= model.vocab_.size()) {
        Fail(ErrorCode::kUnknownToken, "count table token out of range");
      }
      model.Add(ctx, next, pair.at(1).get<uint64_t>());
    }
  }
  return model;
}

void MaskedNgramModel::Save(const std::filesystem::path& path) const {
  WriteJsonFile(path, ToJson());
}

MaskedNgramModel MaskedNgramModel::Load(const std::filesystem::path& path) {
  return FromJson(ReadJsonFile(path));
}

}  // namespace ratex::model
