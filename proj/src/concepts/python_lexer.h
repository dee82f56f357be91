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

#ifndef RATEX_CONCEPTS_PYTHON_LEXER_H_
#define RATEX_CONCEPTS_PYTHON_LEXER_H_

#include <string>
#include <string_view>
#include <vector>

#include "ratex/concepts/syntax_tree.h"

namespace ratex::concepts::python {

enum class Kind { kName, kNumber, kString, kOp, kNewline, kIndent, kDedent, kEnd };

struct Token {
  Kind kind;
  ByteSpan span;
  std::string_view text;
  // Strings only: prefix+quote length and whether the closing quote exists.
  size_t open_len = 0;
  size_t close_len = 0;
};

struct Trivia {
  std::string type;  // "indent", "whitespace", "newline", "line_continuation"
  ByteSpan span;
};

struct LexResult {
  std::vector<Token> tokens;
  std::vector<Trivia> trivia;
  std::vector<ByteSpan> comments;
  std::vector<ByteSpan> errors;
};

// Tokenizes with Python's logical-line rules: NEWLINE only at bracket depth
// zero on lines carrying tokens, zero-width INDENT/DEDENT from a column
// stack (tabs advance to the next multiple of 8). Never throws; lexical
// problems are reported as error spans.
LexResult Lex(std::string_view text);

bool IsHardKeyword(std::string_view word);

}  // namespace ratex::concepts::python

#endif  // RATEX_CONCEPTS_PYTHON_LEXER_H_
