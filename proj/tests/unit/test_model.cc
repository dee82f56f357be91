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

#include <cmath>
#include <map>
#include <numeric>

#include "doctest.h"
#include "ratex/model/code_tokenizer.h"
#include "ratex/model/decode.h"
#include "ratex/model/lookup_model.h"
#include "ratex/model/model_loader.h"
#include "ratex/model/ngram_model.h"
#include "ratex/model/tokenize.h"
#include "ratex/testbed/corpus.h"
#include "unit/test_util.h"

using namespace ratex;
using namespace ratex::model;
using testing::ErrorOf;

namespace {

std::vector<std::string> Texts(const std::vector<TextPiece>& pieces) {
  std::vector<std::string> out;
  for (const TextPiece& p : pieces) out.push_back(p.text);
  return out;
}

// Vocabulary with the reserved ids followed by `words`, and `text` encoded.
struct Encoded {
  Vocabulary vocab;
  std::vector<VocabId> ids;
};

Encoded Encode(const std::vector<std::string>& words, const std::string& text) {
  std::vector<std::string> pieces;
  std::string word;
  for (char c : text + " ") {
    if (c == ' ') {
      if (!word.empty()) pieces.push_back(word);
      word.clear();
    } else {
      word += c;
    }
  }
  std::vector<std::vector<std::string>> corpus = {words};
  Encoded out{Vocabulary::Build(corpus), {}};
  for (const std::string& p : pieces) out.ids.push_back(out.vocab.Encode(p));
  return out;
}

MaskedNgramModel TrainOn(const Encoded& e, int order, double dropout, int passes = 1,
                         uint64_t seed = 0) {
  NgramOptions options;
  options.order = order;
  options.dropout_rate = dropout;
  options.passes = passes;
  options.seed = seed;
  std::vector<std::vector<VocabId>> corpus = {e.ids};
  return MaskedNgramModel::Train(corpus, e.vocab, options);
}

}  // namespace

TEST_CASE("code splitting partitions the input") {
  CHECK(Texts(SplitCode("if x")) == std::vector<std::string>{"if", " ", "x"});
  CHECK(Texts(SplitCode("a\r\nb")) == std::vector<std::string>{"a", "\r\n", "b"});
  CHECK(Texts(SplitCode("    x = \"\"\"doc\"\"\"")) ==
        std::vector<std::string>{"    ", "x", " ", "=", " ", "\"\"\"", "doc", "\"\"\""});
  CHECK(SplitCode("").empty());

  for (const testbed::CorpusEntry& e : testbed::ReadCorpus(testing::Fixture("corpus/desk50.jsonl"))) {
    size_t cursor = 0;
    std::string joined;
    for (const TextPiece& p : SplitCode(e.source)) {
      CHECK(p.span.begin == cursor);
      CHECK(p.span.end > p.span.begin);
      CHECK(e.source.substr(p.span.begin, p.span.size()) == p.text);
      cursor = p.span.end;
      joined += p.text;
    }
    CHECK(joined == e.source);
  }
}

TEST_CASE("vocabulary reserves the special tokens") {
  std::vector<std::vector<std::string>> corpus = {{"b", "a", "b"}};
  const Vocabulary v = Vocabulary::Build(corpus);
  CHECK(v.size() == 6);
  CHECK(v.Find("<mask>") == kMaskId);
  CHECK(v.Find("<bos>") == kBosId);
  CHECK(v.Find("<eos>") == kEosId);
  CHECK(v.Find("<unk>") == kUnkId);
  CHECK(v.Encode("b").value == 4);
  CHECK(v.Encode("zzz") == kUnkId);
  CHECK(v.Text(VocabId{5}) == "a");
  CHECK(ErrorOf([] { Vocabulary({"a", "a"}); }) == ErrorCode::kInvalidArgument);
  CHECK(ErrorOf([] { Vocabulary({"a"}).Encode("b"); }) == ErrorCode::kUnknownToken);
}

TEST_CASE("distributions are validated") {
  CHECK(ErrorOf([] { Distribution({0.5, 0.6}); }) == ErrorCode::kBackendError);
  CHECK(ErrorOf([] { Distribution({-0.1, 1.1}); }) == ErrorCode::kBackendError);
  CHECK(ErrorOf([] { Distribution({NAN, 1.0}); }) == ErrorCode::kBackendError);
  const Distribution d({0.2, 0.4, 0.4});
  CHECK(d.ArgMax().value == 1);
  CHECK(d.Rank(VocabId{2}) == 2);
  CHECK(d.Rank(VocabId{0}) == 3);
  const std::vector<double> logp = {std::log(0.25), std::log(0.75)};
  const Distribution e = Distribution::FromLogProbs(logp);
  CHECK(e[VocabId{1}] == doctest::Approx(0.75).epsilon(1e-15));
}

TEST_CASE("context subsets enforce ordering") {
  CHECK(ErrorOf([] { ContextSubset({{2, {4}}, {1, {4}}}, 3); }) == ErrorCode::kInvalidArgument);
  CHECK(ErrorOf([] { ContextSubset({{3, {4}}}, 3); }) == ErrorCode::kInvalidArgument);
  const std::vector<VocabId> seq = {{4}, {5}, {6}, {7}};
  const std::vector<size_t> positions = {2, 0};
  const ContextSubset s = ContextSubset::Select(seq, positions, 3);
  CHECK(s.size() == 2);
  CHECK(s.entries()[0].position == 0);
  CHECK(s.entries()[1].token.value == 6);
  CHECK(s.Key() == ContextSubset({{0, {4}}, {2, {6}}}, 3).Key());
  CHECK(ContextSubset::Prefix(seq, 3).size() == 3);
  const std::vector<size_t> bad = {3};
  CHECK(ErrorOf([&] { ContextSubset::Select(seq, bad, 3); }) == ErrorCode::kInvalidArgument);
}

TEST_CASE("lookup backend returns tabled distributions") {
  LookupModel m(Vocabulary({"if", "x", "else", ":"}));
  m.Set(ContextSubset({{0, {0}}}, 3), {0.05, 0.025, 0.9, 0.025});
  const Distribution d = m.Evaluate(ContextSubset({{0, {0}}}, 3));
  CHECK(d.ArgMax().value == 2);
  CHECK(d[VocabId{2}] == 0.9);
  const Distribution u = m.Evaluate(ContextSubset({}, 3));
  for (double p : u.probabilities()) CHECK(p == 0.25);
  CHECK(m.evaluations() == 2);
  CHECK(ErrorOf([&] { m.Evaluate(ContextSubset({{0, {9}}}, 1)); }) == ErrorCode::kUnknownToken);
  CHECK(ErrorOf([&] { m.Set(ContextSubset({}, 1), {1.0}); }) == ErrorCode::kInvalidArgument);
}

TEST_CASE("masked n-gram bigram statistics") {
  const Encoded e = Encode({"a", "b"}, "a b a b a b");
  const MaskedNgramModel m = TrainOn(e, 2, 0.5);
  const Distribution d = m.Evaluate(ContextSubset({{0, e.vocab.Encode("a")}}, 1));
  CHECK(d.ArgMax() == e.vocab.Encode("b"));
  for (VocabId reserved : {kMaskId, kBosId}) CHECK(d[reserved] == 0.0);
}

TEST_CASE("unigram probabilities follow the add-alpha closed form") {
  const Encoded e = Encode({"a", "b"}, "a a a b");
  for (int passes : {1, 16}) {
    const MaskedNgramModel m = TrainOn(e, 1, 0.5, passes);
    const Distribution d = m.Evaluate(ContextSubset({}, 0));
    // Support: every id except <mask> and <bos>.
    const double support = static_cast<double>(e.vocab.size() - 2);
    const double alpha = 0.1;
    const double n = 4.0 * passes;
    CHECK(d[e.vocab.Encode("a")] == doctest::Approx((3.0 * passes + alpha) / (n + alpha * support)));
    CHECK(d[e.vocab.Encode("b")] == doctest::Approx((1.0 * passes + alpha) / (n + alpha * support)));
    CHECK(d[kUnkId] == doctest::Approx(alpha / (n + alpha * support)));
  }
}

TEST_CASE("dropout zero reproduces classic n-gram counts") {
  const Encoded e = Encode({"p", "q", "r", "s"}, "p q r p q s p q r r s p");
  const int order = 3;
  const MaskedNgramModel m = TrainOn(e, order, 0.0);
  // Independent count of (previous two tokens, next) with <bos> padding.
  std::map<std::vector<uint32_t>, std::map<uint32_t, uint64_t>> oracle;
  for (size_t t = 0; t < e.ids.size(); ++t) {
    std::vector<uint32_t> ctx;
    for (int k = order - 1; k >= 1; --k) {
      ctx.push_back(t >= static_cast<size_t>(k) ? e.ids[t - k].value : kBosId.value);
    }
    oracle[ctx][e.ids[t].value]++;
  }
  CHECK(m.context_count() == oracle.size());
  for (const auto& [ctx, nexts] : oracle) {
    std::vector<VocabId> key;
    for (uint32_t id : ctx) key.push_back({id});
    uint64_t total = 0;
    for (const auto& [next, count] : nexts) {
      CHECK(m.Count(key, VocabId{next}) == count);
      total += count;
    }
    CHECK(m.ContextTotal(key) == total);
  }
}

TEST_CASE("training is deterministic under a fixed seed") {
  const Encoded e = Encode({"a", "b", "c"}, "a b c a c b a b b c a");
  CHECK(TrainOn(e, 2, 0.5, 1, 11).ToJson() == TrainOn(e, 2, 0.5, 1, 11).ToJson());
  CHECK(TrainOn(e, 3, 0.5, 1, 11).ToJson() != TrainOn(e, 3, 0.5, 1, 12).ToJson());
  CHECK(NgramOptions{}.dropout_rate == 0.5);
}

TEST_CASE("n-gram options are validated") {
  const Encoded e = Encode({"a"}, "a");
  CHECK(ErrorOf([&] { TrainOn(e, 0, 0.5); }) == ErrorCode::kInvalidArgument);
  CHECK(ErrorOf([&] { TrainOn(e, 2, 1.0); }) == ErrorCode::kInvalidArgument);
  std::vector<std::vector<VocabId>> none;
  CHECK(ErrorOf([&] { MaskedNgramModel::Train(none, e.vocab, {}); }) == ErrorCode::kEmptyCorpus);
}

TEST_CASE("unseen masked contexts back off to observed slots") {
  const Encoded e = Encode({"a", "b", "c"}, "a b c a b c");
  const MaskedNgramModel m = TrainOn(e, 3, 0.0);
  // (c, b) never occurs; masking the oldest slot leaves (<mask>, b), also
  // unseen with dropout off, then the all-mask context is unseen too.
  const Distribution d =
      m.Evaluate(ContextSubset({{0, e.vocab.Encode("c")}, {1, e.vocab.Encode("b")}}, 2));
  const double uniform = 1.0 / static_cast<double>(e.vocab.size() - 2);
  CHECK(d[e.vocab.Encode("a")] == doctest::Approx(uniform));
  // The full observed context is used directly.
  const Distribution f =
      m.Evaluate(ContextSubset({{0, e.vocab.Encode("a")}, {1, e.vocab.Encode("b")}}, 2));
  CHECK(f.ArgMax() == e.vocab.Encode("c"));
}

TEST_CASE("n-gram files round trip") {
  testing::ScratchDir dir;
  const Encoded e = Encode({"a", "b", "c"}, "a b c a c b a b b c a");
  const MaskedNgramModel m = TrainOn(e, 3, 0.5, 4, 5);
  m.Save(dir / "m.json");
  const MaskedNgramModel back = MaskedNgramModel::Load(dir / "m.json");
  CHECK(back.ToJson() == m.ToJson());
  const std::unique_ptr<LanguageModel> loaded = LoadModel((dir / "m.json").string());
  for (size_t t = 0; t < e.ids.size(); ++t) {
    const ContextSubset s = ContextSubset::Prefix(e.ids, t);
    CHECK(loaded->Evaluate(s).probabilities() == m.Evaluate(s).probabilities());
  }
  WriteJsonFile(dir / "x.json", MakeDocument("something_else"));
  CHECK(ErrorOf([&] { LoadModel((dir / "x.json").string()); }) == ErrorCode::kSchemaMismatch);
}

TEST_CASE("greedy decoding") {
  LookupModel chain(Vocabulary({"a", "b", "c"}));
  chain.Set(ContextSubset({{0, {0}}}, 1), {0.1, 0.8, 0.1});
  chain.Set(ContextSubset({{0, {0}}, {1, {1}}}, 2), {0.1, 0.1, 0.8});
  const std::vector<VocabId> prompt = {{0}};
  CHECK(GreedyDecode(chain, prompt, 0) == prompt);
  CHECK(GreedyDecode(chain, prompt, 2) == std::vector<VocabId>{{0}, {1}, {2}});

  const Encoded e = Encode({"x", "y", "z"}, "x y z x y z");
  for (double dropout : {0.0, 0.5}) {
    const MaskedNgramModel m = TrainOn(e, 2, dropout);
    const std::vector<VocabId> start = {e.vocab.Encode("x")};
    const std::vector<VocabId> out = GreedyDecode(m, start, 2);
    REQUIRE(out.size() == 3);
    CHECK(e.vocab.Text(out[1]) == "y");
    CHECK(e.vocab.Text(out[2]) == "z");
  }
}

TEST_CASE("greedy decoding stops at end of sequence") {
  std::vector<std::vector<std::string>> corpus = {{"a"}};
  LookupModel m(Vocabulary::Build(corpus));
  std::vector<double> eos(m.vocab_size(), 0.0);
  eos[kEosId.value] = 1.0;
  m.SetDefault(eos);
  const std::vector<VocabId> prompt = {VocabId{4}};
  CHECK(GreedyDecode(m, prompt, 5) == prompt);
}

TEST_CASE("vocabulary tokenization") {
  std::vector<std::string> sources = {"if x:\n    y"};
  const MaskedNgramModel m = MaskedNgramModel::TrainFromTexts(sources, {});
  const TokenizedText empty = TokenizeText(m, "");
  CHECK(empty.ids.empty());
  CHECK(empty.spans.empty());
  const TokenizedText t = TokenizeText(m, "if x");
  REQUIRE(t.spans.size() == 3);
  CHECK(t.spans[0] == ByteSpan{0, 2});
  CHECK(t.spans[2] == ByteSpan{3, 4});
  const TokenizedText u = TokenizeText(m, "if zz");
  CHECK(u.ids.back() == kUnkId);
  CHECK(TokenTexts(m, t.ids) == std::vector<std::string>{"if", " ", "x"});
}
