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

#ifndef RATEX_TESTBED_TESTBED_H_
#define RATEX_TESTBED_TESTBED_H_

#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "ratex/common/json_io.h"
#include "ratex/model/language_model.h"
#include "ratex/testbed/corpus.h"
#include "ratex/testbed/prompt.h"

namespace ratex::testbed {

using model::VocabId;

struct SnippetToken {
  VocabId id;
  std::string text;
  ByteSpan span;
  friend bool operator==(const SnippetToken&, const SnippetToken&) = default;
};

// A prompt plus its greedy completion. tokens[0, boundary) cover the prompt
// text exactly; the remaining tokens are generated.
struct Snippet {
  std::string id;
  std::string source_id;
  std::string testbed_id;
  std::string language;
  PromptStyle style = PromptStyle::kTB1;
  uint64_t prompt_seed = 0;
  size_t cut = 0;
  std::string prompt;
  std::string text;  // prompt + generated text
  std::vector<SnippetToken> tokens;
  size_t boundary = 0;

  std::vector<VocabId> Ids() const;
  std::vector<ByteSpan> Spans() const;
  friend bool operator==(const Snippet&, const Snippet&) = default;
};

Json ToJson(const Snippet& snippet);
Snippet SnippetFromJson(const Json& doc);

struct TestbedOptions {
  PromptStyle style = PromptStyle::kTB1;
  size_t n_sequences = 10;
  size_t trials = 30;
  uint64_t seed = 0;
  size_t max_new = 64;
  // Defaults to the lower-case style name.
  std::string id;
  size_t jobs = 1;
};

struct Testbed {
  std::string id;
  PromptStyle style = PromptStyle::kTB1;
  uint64_t seed = 0;
  size_t trials = 0;
  size_t max_new = 0;
  std::string model_name;
  // Corpus entries passed over: not Python, not promptable, or duplicates.
  size_t skipped = 0;
  std::vector<Snippet> snippets;

  Json Manifest() const;
};

// Takes the first `n_sequences` Python entries that yield a distinct prompt
// of the requested style, then completes each prompt with greedy decoding.
// The prompt seed of an entry is derived from (seed, entry id). Throws
// kInsufficientCorpus when too few entries qualify.
Testbed BuildTestbed(std::span<const CorpusEntry> corpus, const TestbedOptions& options,
                     const model::LanguageModel& model);

// <dir>/manifest.json and <dir>/snippets/<snippet id>.json
void WriteTestbed(const std::filesystem::path& dir, const Testbed& testbed);
Testbed ReadTestbed(const std::filesystem::path& dir);

}  // namespace ratex::testbed

#endif  // RATEX_TESTBED_TESTBED_H_
