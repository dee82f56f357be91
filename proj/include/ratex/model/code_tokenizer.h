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

#ifndef RATEX_MODEL_CODE_TOKENIZER_H_
#define RATEX_MODEL_CODE_TOKENIZER_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace ratex::model {

// A contiguous byte range [begin, end) of some source text.
struct ByteSpan {
  size_t begin = 0;
  size_t end = 0;

  size_t size() const { return end - begin; }
  // Midpoint used for aligning model tokens with syntax-tree leaves. Empty
  // spans map to their start.
  size_t midpoint() const { return begin + (end > begin ? (end - begin - 1) / 2 : 0); }
  bool Contains(const ByteSpan& other) const {
    return begin <= other.begin && other.end <= end;
  }
  friend bool operator==(const ByteSpan&, const ByteSpan&) = default;
};

struct TextPiece {
  std::string text;
  ByteSpan span;
};

// Splits source text into model tokens. The pieces partition the input:
// concatenating their text reproduces it exactly.
//
//   * "\n" and "\r\n" are single pieces;
//   * a run of spaces/tabs is one piece (leading runs act as indentation);
//   * identifiers/words (including non-ASCII bytes) and numbers are one piece;
//   * triple quotes and common multi-character operators are one piece;
//   * every other byte is its own piece.
std::vector<TextPiece> SplitCode(std::string_view text);

}  // namespace ratex::model

#endif  // RATEX_MODEL_CODE_TOKENIZER_H_
