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

#include "ratex/testbed/testbed.h"

#include <cctype>
#include <cstdio>
#include <set>

#include "ratex/common/errors.h"
#include "ratex/common/random.h"
#include "ratex/common/thread_pool.h"
#include "ratex/model/decode.h"
#include "ratex/model/tokenize.h"

namespace ratex::testbed {

std::vector<VocabId> Snippet::Ids() const {
  std::vector<VocabId> ids;
  ids.reserve(tokens.size());
  for (const SnippetToken& t : tokens) ids.push_back(t.id);
  return ids;
}

std::vector<ByteSpan> Snippet::Spans() const {
  std::vector<ByteSpan> spans;
  spans.reserve(tokens.size());
  for (const SnippetToken& t : tokens) spans.push_back(t.span);
  return spans;
}

Json ToJson(const Snippet& snippet) {
  Json doc = MakeDocument("snippet");
  doc["id"] = snippet.id;
  doc["source_id"] = snippet.source_id;
  doc["testbed_id"] = snippet.testbed_id;
  doc["language"] = snippet.language;
  doc["style"] = PromptStyleName(snippet.style);
  doc["prompt_seed"] = snippet.prompt_seed;
  doc["cut"] = snippet.cut;
  doc["prompt"] = snippet.prompt;
  doc["text"] = snippet.text;
  doc["boundary"] = snippet.boundary;
  Json tokens = Json::array();
  for (const SnippetToken& t : snippet.tokens) {
    tokens.push_back({t.id.value, t.text, t.span.begin, t.span.end});
  }
  doc["tokens"] = tokens;
  return doc;
}

Snippet SnippetFromJson(const Json& doc) {
  CheckDocument(doc, "snippet");
  Snippet s;
  s.id = doc.at("id").get<std::string>();
  s.source_id = doc.at("source_id").get<std::string>();
  s.testbed_id = doc.at("testbed_id").get<std::string>();
  s.language = doc.at("language").get<std::string>();
  s.style = ParsePromptStyle(doc.at("style").get<std::string>());
  s.prompt_seed = doc.at("prompt_seed").get<uint64_t>();
  s.cut = doc.at("cut").get<size_t>();
  s.prompt = doc.at("prompt").get<std::string>();
  s.text = doc.at("text").get<std::string>();
  s.boundary = doc.at("boundary").get<size_t>();
  for (const Json& t : doc.at("tokens")) {
    s.tokens.push_back({VocabId{t.at(0).get<uint32_t>()}, t.at(1).get<std::string>(),
                        {t.at(2).get<size_t>(), t.at(3).get<size_t>()}});
  }
  if (s.boundary > s.tokens.size()) {
    Fail(ErrorCode::kInconsistentSnippet, "snippet " + s.id + " boundary beyond its tokens");
  }
  return s;
}

Json Testbed::Manifest() const {
  Json doc = MakeDocument("testbed");
  doc["id"] = id;
  doc["style"] = PromptStyleName(style);
  doc["seed"] = seed;
  doc["trials"] = trials;
  doc["max_new"] = max_new;
  doc["model"] = model_name;
  doc["unique_sequences"] = snippets.size();
  doc["skipped"] = skipped;
  Json ids = Json::array();
  for (const Snippet& s : snippets) ids.push_back(s.id);
  doc["snippets"] = ids;
  return doc;
}

namespace {

bool Promptable(const Error& e) {
  return e.code() == ErrorCode::kMissingDocstring || e.code() == ErrorCode::kMissingSignature ||
         e.code() == ErrorCode::kBodyTooShort;
}

std::string SnippetId(const std::string& testbed, size_t index) {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%04zu", index);
  return testbed + "-" + buf;
}

}  // namespace

Testbed BuildTestbed(std::span<const CorpusEntry> corpus, const TestbedOptions& options,
                     const model::LanguageModel& model) {
  if (options.n_sequences == 0) Fail(ErrorCode::kInvalidArgument, "n_sequences must be positive");
  if (options.trials == 0) Fail(ErrorCode::kInvalidArgument, "trials must be positive");
  Testbed testbed;
  testbed.style = options.style;
  testbed.seed = options.seed;
  testbed.trials = options.trials;
  testbed.max_new = options.max_new;
  testbed.model_name = model.name();
  testbed.id = options.id;
  if (testbed.id.empty()) {
    for (char c : PromptStyleName(options.style)) {
      testbed.id += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    }
  }

  std::set<std::string> seen;
  for (const CorpusEntry& entry : corpus) {
    if (testbed.snippets.size() == options.n_sequences) break;
    if (entry.language != "python") {
      ++testbed.skipped;
      continue;
    }
    const uint64_t seed = DeriveSeed(options.seed, {HashString(entry.id)});
    Prompt prompt;
    try {
      prompt = MakePrompt(entry.source, options.style, seed);
    } catch (const Error& e) {
      if (!Promptable(e)) throw;
      ++testbed.skipped;
      continue;
    }
    if (!seen.insert(prompt.text).second) {
      ++testbed.skipped;
      continue;
    }
    Snippet s;
    s.id = SnippetId(testbed.id, testbed.snippets.size());
    s.source_id = entry.id;
    s.testbed_id = testbed.id;
    s.language = entry.language;
    s.style = options.style;
    s.prompt_seed = seed;
    s.cut = prompt.cut;
    s.prompt = std::move(prompt.text);
    testbed.snippets.push_back(std::move(s));
  }
  if (testbed.snippets.size() < options.n_sequences) {
    Fail(ErrorCode::kInsufficientCorpus,
         "corpus yields " + std::to_string(testbed.snippets.size()) + " of " +
             std::to_string(options.n_sequences) + " requested " +
             std::string(PromptStyleName(options.style)) + " prompts");
  }

  ParallelFor(testbed.snippets.size(), options.jobs, [&](size_t i) {
    Snippet& s = testbed.snippets[i];
    const model::TokenizedText prompt = model::TokenizeText(model, s.prompt);
    const std::vector<VocabId> full = model::GreedyDecode(model, prompt.ids, options.max_new);
    const std::vector<VocabId> generated(full.begin() + static_cast<std::ptrdiff_t>(prompt.ids.size()),
                                         full.end());
    const std::vector<std::string> texts = model::TokenTexts(model, generated);
    s.boundary = prompt.ids.size();
    s.text = s.prompt;
    for (size_t k = 0; k < prompt.ids.size(); ++k) {
      const ByteSpan span = prompt.spans[k];
      s.tokens.push_back({prompt.ids[k], s.prompt.substr(span.begin, span.size()), span});
    }
    for (size_t k = 0; k < generated.size(); ++k) {
      const size_t begin = s.text.size();
      s.text += texts[k];
      s.tokens.push_back({generated[k], texts[k], {begin, s.text.size()}});
    }
  });
  return testbed;
}

void WriteTestbed(const std::filesystem::path& dir, const Testbed& testbed) {
  std::filesystem::create_directories(dir / "snippets");
  for (const Snippet& s : testbed.snippets) {
    WriteJsonFile(dir / "snippets" / (s.id + ".json"), ToJson(s));
  }
  WriteJsonFile(dir / "manifest.json", testbed.Manifest());
}

Testbed ReadTestbed(const std::filesystem::path& dir) {
  const Json manifest = ReadJsonFile(dir / "manifest.json");
  CheckDocument(manifest, "testbed");
  Testbed testbed;
  testbed.id = manifest.at("id").get<std::string>();
  testbed.style = ParsePromptStyle(manifest.at("style").get<std::string>());
  testbed.seed = manifest.at("seed").get<uint64_t>();
  testbed.trials = manifest.at("trials").get<size_t>();
  testbed.max_new = manifest.at("max_new").get<size_t>();
  testbed.model_name = manifest.at("model").get<std::string>();
  testbed.skipped = manifest.at("skipped").get<size_t>();
  for (const Json& id : manifest.at("snippets")) {
    testbed.snippets.push_back(
        SnippetFromJson(ReadJsonFile(dir / "snippets" / (id.get<std::string>() + ".json"))));
  }
  return testbed;
}

}  // namespace ratex::testbed
