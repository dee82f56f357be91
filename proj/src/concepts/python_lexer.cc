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

#include "python_lexer.h"

#include <algorithm>
#include <array>
#include <cctype>

namespace ratex::concepts::python {
namespace {

constexpr std::array<std::string_view, 35> kKeywords = {
    "False", "None",   "True",    "and",      "as",       "assert", "async",
    "await", "break",  "class",   "continue", "def",      "del",    "elif",
    "else",  "except", "finally", "for",      "from",     "global", "if",
    "import", "in",    "is",      "lambda",   "nonlocal", "not",    "or",
    "pass",  "raise",  "return",  "try",      "while",    "with",   "yield"};

constexpr std::array<std::string_view, 5> kThreeCharOps = {"**=", "//=", ">>=",
                                                          "<<=", "..."};
constexpr std::array<std::string_view, 19> kTwoCharOps = {
    "**", "//", ">>", "<<", "<=", ">=", "==", "!=", "->", "+=",
    "-=", "*=", "/=", "%=", "@=", "&=", "|=", "^=", ":="};

bool IsNameStart(unsigned char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_' ||
         c >= 0x80;
}
bool IsNameChar(unsigned char c) {
  return IsNameStart(c) || (c >= '0' && c <= '9');
}
bool IsDigit(unsigned char c) { return c >= '0' && c <= '9'; }

bool IsStringPrefix(std::string_view p) {
  std::string lower;
  for (char c : p) lower.push_back(static_cast<char>(std::tolower(c)));
  return lower == "r" || lower == "u" || lower == "b" || lower == "f" ||
         lower == "br" || lower == "rb" || lower == "fr" || lower == "rf";
}

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  LexResult Run() {
    const size_t n = text_.size();
    while (i_ < n) {
      if (at_line_start_ && depth_ == 0) {
        LineStart();
        continue;
      }
      const unsigned char c = static_cast<unsigned char>(text_[i_]);
      if (c == ' ' || c == '\t' || c == '\f') {
        size_t j = i_;
        while (j < n && (text_[j] == ' ' || text_[j] == '\t' || text_[j] == '\f')) ++j;
        out_.trivia.push_back({after_newline_ ? "indent" : "whitespace", {i_, j}});
        i_ = j;
        continue;
      }
      after_newline_ = false;
      if (c == '\\' && i_ + 1 < n && (text_[i_ + 1] == '\n' || text_[i_ + 1] == '\r')) {
        out_.trivia.push_back({"line_continuation", {i_, i_ + 1}});
        ++i_;
        const size_t len = NewlineLength(i_);
        out_.trivia.push_back({"newline", {i_, i_ + len}});
        i_ += len;
        continue;
      }
      if (c == '\n' || c == '\r') {
        const size_t len = NewlineLength(i_);
        if (depth_ > 0 || !line_has_tokens_) {
          out_.trivia.push_back({"newline", {i_, i_ + len}});
          after_newline_ = depth_ > 0;
        } else {
          Emit(Kind::kNewline, i_, i_ + len);
          line_has_tokens_ = false;
        }
        i_ += len;
        at_line_start_ = depth_ == 0;
        continue;
      }
      if (c == '#') {
        size_t j = i_;
        while (j < n && text_[j] != '\n' && text_[j] != '\r') ++j;
        out_.comments.push_back({i_, j});
        i_ = j;
        continue;
      }
      if (TryString()) continue;
      if (IsNameStart(c)) {
        size_t j = i_ + 1;
        while (j < n && IsNameChar(static_cast<unsigned char>(text_[j]))) ++j;
        Emit(Kind::kName, i_, j);
        i_ = j;
        continue;
      }
      if (IsDigit(c) || (c == '.' && i_ + 1 < n &&
                         IsDigit(static_cast<unsigned char>(text_[i_ + 1])))) {
        size_t j = i_ + 1;
        while (j < n) {
          const unsigned char d = static_cast<unsigned char>(text_[j]);
          if (IsNameChar(d) || d == '.') {
            ++j;
          } else if ((d == '+' || d == '-') &&
                     (text_[j - 1] == 'e' || text_[j - 1] == 'E') &&
                     !(text_[i_] == '0' && j > i_ + 1 &&
                       (text_[i_ + 1] == 'x' || text_[i_ + 1] == 'X'))) {
            ++j;
          } else {
            break;
          }
        }
        Emit(Kind::kNumber, i_, j);
        i_ = j;
        continue;
      }
      Operator();
    }
    if (line_has_tokens_) Emit(Kind::kNewline, n, n);
    while (indents_.size() > 1) {
      indents_.pop_back();
      Emit(Kind::kDedent, n, n);
    }
    Emit(Kind::kEnd, n, n);
    return std::move(out_);
  }

 private:
  size_t NewlineLength(size_t at) const {
    return text_[at] == '\r' && at + 1 < text_.size() && text_[at + 1] == '\n' ? 2 : 1;
  }

  void Emit(Kind kind, size_t begin, size_t end) {
    out_.tokens.push_back({kind, {begin, end}, text_.substr(begin, end - begin)});
    if (kind != Kind::kNewline && kind != Kind::kIndent &&
        kind != Kind::kDedent && kind != Kind::kEnd) {
      line_has_tokens_ = true;
    }
  }

  void LineStart() {
    const size_t n = text_.size();
    size_t j = i_;
    size_t column = 0;
    while (j < n && (text_[j] == ' ' || text_[j] == '\t' || text_[j] == '\f')) {
      column = text_[j] == '\t' ? (column / 8 + 1) * 8 : column + 1;
      ++j;
    }
    if (j > i_) out_.trivia.push_back({"indent", {i_, j}});
    at_line_start_ = false;
    after_newline_ = false;
    const bool blank = j >= n || text_[j] == '\n' || text_[j] == '\r' ||
                       text_[j] == '#' ||
                       (text_[j] == '\\' && j + 1 < n &&
                        (text_[j + 1] == '\n' || text_[j + 1] == '\r'));
    i_ = j;
    if (blank) return;
    if (column > indents_.back()) {
      indents_.push_back(column);
      Emit(Kind::kIndent, j, j);
    } else if (column < indents_.back()) {
      while (indents_.size() > 1 && column < indents_.back()) {
        indents_.pop_back();
        Emit(Kind::kDedent, j, j);
      }
      if (column != indents_.back()) {
        size_t e = j;
        while (e < n && text_[e] != '\n' && text_[e] != '\r') ++e;
        out_.errors.push_back({j, e});
      }
    }
  }

  bool TryString() {
    const size_t n = text_.size();
    size_t j = i_;
    while (j < n && j - i_ < 2 && std::isalpha(static_cast<unsigned char>(text_[j]))) ++j;
    if (j >= n || (text_[j] != '"' && text_[j] != '\'')) return false;
    if (j > i_ && !IsStringPrefix(text_.substr(i_, j - i_))) return false;
    const char quote = text_[j];
    const bool triple = j + 2 < n && text_[j + 1] == quote && text_[j + 2] == quote;
    const size_t qlen = triple ? 3 : 1;
    size_t k = j + qlen;
    bool terminated = false;
    while (k < n) {
      const char c = text_[k];
      if (c == '\\') {
        k += 2;
        continue;
      }
      if (!triple && (c == '\n' || c == '\r')) break;
      if (c == quote &&
          (!triple || (k + 2 < n && text_[k + 1] == quote && text_[k + 2] == quote))) {
        k += qlen;
        terminated = true;
        break;
      }
      ++k;
    }
    k = std::min(k, n);
    Emit(Kind::kString, i_, k);
    out_.tokens.back().open_len = j - i_ + qlen;
    out_.tokens.back().close_len = terminated ? qlen : 0;
    if (!terminated) out_.errors.push_back({i_, k});
    i_ = k;
    return true;
  }

  void Operator() {
    size_t len = 1;
    for (std::string_view op : kThreeCharOps) {
      if (text_.substr(i_, 3) == op) {
        len = 3;
        break;
      }
    }
    if (len == 1) {
      for (std::string_view op : kTwoCharOps) {
        if (text_.substr(i_, 2) == op) {
          len = 2;
          break;
        }
      }
    }
    const char c = text_[i_];
    if (len == 1) {
      if (c == '(' || c == '[' || c == '{') {
        ++depth_;
      } else if (c == ')' || c == ']' || c == '}') {
        if (depth_ == 0) {
          out_.errors.push_back({i_, i_ + 1});
        } else {
          --depth_;
        }
      }
    }
    Emit(Kind::kOp, i_, i_ + len);
    i_ += len;
  }

  std::string_view text_;
  size_t i_ = 0;
  int depth_ = 0;
  bool at_line_start_ = true;
  bool after_newline_ = false;
  bool line_has_tokens_ = false;
  std::vector<size_t> indents_ = {0};
  LexResult out_;
};

}  // namespace

bool IsHardKeyword(std::string_view word) {
  return std::find(kKeywords.begin(), kKeywords.end(), word) != kKeywords.end();
}

LexResult Lex(std::string_view text) { return Lexer(text).Run(); }

}  // namespace ratex::concepts::python
