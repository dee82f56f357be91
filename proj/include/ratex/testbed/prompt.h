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

#ifndef RATEX_TESTBED_PROMPT_H_
#define RATEX_TESTBED_PROMPT_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ratex/model/code_tokenizer.h"

namespace ratex::testbed {

using model::ByteSpan;

enum class PromptStyle {
  kTB1,  // signature + truncated body
  kTB2,  // docstring + signature + truncated body
  kTB3,  // docstring + signature
  kTB4,  // docstring only
};

// Accepts "TB1".."TB4" in any case; throws kInvalidArgument otherwise.
PromptStyle ParsePromptStyle(std::string_view name);
std::string_view PromptStyleName(PromptStyle style);

// Line structure of the first function defined in a Python source.
struct MethodLayout {
  // From the first decorator or "def" through the newline ending the header.
  ByteSpan signature;
  // The docstring statement, if the body starts with a string literal.
  std::optional<ByteSpan> docstring;
  // Logical body lines after the docstring; each runs from the start of its
  // physical line to the start of the next logical line (or the end of the
  // function including its final newline).
  std::vector<ByteSpan> body_lines;
};

// Throws kMissingSignature when no well-formed function header exists and
// kBodyTooShort when the body shares the header line.
MethodLayout AnalyzeMethod(std::string_view source);

// The docstring literal with continuation lines dedented by the statement's
// indentation, followed by a newline.
std::string DocstringText(std::string_view source, const MethodLayout& layout);

// Seeded cut in [2, body_lines]: the prompt keeps body lines 1..cut-1.
// Throws kBodyTooShort when body_lines < 2.
size_t TruncationCut(size_t body_lines, uint64_t seed);

struct Prompt {
  std::string text;
  // Body line where the source was cut (TB1/TB2), 0 otherwise.
  size_t cut = 0;
};

// TB1 = signature + body lines before the cut; TB2 = docstring + TB1;
// TB3 = docstring + signature; TB4 = docstring. Throws kMissingDocstring
// for TB2-TB4 on undocumented functions.
Prompt MakePrompt(std::string_view source, PromptStyle style, uint64_t seed);

}  // namespace ratex::testbed

#endif  // RATEX_TESTBED_PROMPT_H_
