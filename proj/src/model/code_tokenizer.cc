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

#include "ratex/model/code_tokenizer.h"

#include <array>

namespace ratex::model {
namespace {

bool IsWordByte(unsigned char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
         (c >= '0' && c <= '9') || c == '_' || c >= 0x80;
}

bool IsDigit(unsigned char c) { return c >= '0' && c <= '9'; }

constexpr std::array<std::string_view, 11> kThreeCharOps = {
    "**=", "//=", ">>=", "<<=", "...", "\"\"\"", "'''", ">>>", "<<<", "!==",
    "==="};
constexpr std::array<std::string_view, 26> kTwoCharOps = {
    "**", "//", "==", "!=", "<=", ">=", "->", "+=", "-=", "*=",
    "/=", "%=", "&=", "|=", "^=", ">>", "<<", ":=", "&&", "||",
    "++", "--", "::", "@=", "/*", "*/"};

}  // namespace

std::vector<TextPiece> SplitCode(std::string_view text) {
  std::vector<TextPiece> out;
  size_t i = 0;
  const size_t n = text.size();
  auto emit = [&](size_t len) {
    out.push_back({std::string(text.substr(i, len)), {i, i + len}});
    i += len;
  };
  while (i < n) {
    const unsigned char c = static_cast<unsigned char>(text[i]);
    if (c == '\n') {
      emit(1);
    } else if (c == '\r') {
      emit(i + 1 < n && text[i + 1] == '\n' ? 2 : 1);
    } else if (c == ' ' || c == '\t') {
      size_t j = i;
      while (j < n && (text[j] == ' ' || text[j] == '\t')) ++j;
      emit(j - i);
    } else if (IsDigit(c)) {
      size_t j = i + 1;
      while (j < n) {
        const unsigned char d = static_cast<unsigned char>(text[j]);
        if (IsWordByte(d)) {
          ++j;
        } else if (d == '.' && j + 1 < n &&
                   IsDigit(static_cast<unsigned char>(text[j + 1]))) {
          j += 2;
        } else {
          break;
        }
      }
      emit(j - i);
    } else if (IsWordByte(c)) {
      size_t j = i + 1;
      while (j < n && IsWordByte(static_cast<unsigned char>(text[j]))) ++j;
      emit(j - i);
    } else {
      size_t len = 1;
      for (std::string_view op : kThreeCharOps) {
        if (text.substr(i, 3) == op) {
          len = 3;
          break;
        }
      }
      if (len == 1) {
        for (std::string_view op : kTwoCharOps) {
          if (text.substr(i, 2) == op) {
            len = 2;
            break;
          }
        }
      }
      emit(len);
    }
  }
  return out;
}

}  // namespace ratex::model
