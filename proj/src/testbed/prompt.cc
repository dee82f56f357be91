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

#include "ratex/testbed/prompt.h"

#include <algorithm>
#include <cctype>

#include "ratex/common/errors.h"
#include "ratex/common/random.h"
#include "ratex/concepts/python_parser.h"

namespace ratex::testbed {

PromptStyle ParsePromptStyle(std::string_view name) {
  std::string upper;
  for (char c : name) upper += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  if (upper == "TB1") return PromptStyle::kTB1;
  if (upper == "TB2") return PromptStyle::kTB2;
  if (upper == "TB3") return PromptStyle::kTB3;
  if (upper == "TB4") return PromptStyle::kTB4;
  Fail(ErrorCode::kInvalidArgument, "unknown prompt style '" + std::string(name) + "'");
}

std::string_view PromptStyleName(PromptStyle style) {
  switch (style) {
    case PromptStyle::kTB1:
      return "TB1";
    case PromptStyle::kTB2:
      return "TB2";
    case PromptStyle::kTB3:
      return "TB3";
    case PromptStyle::kTB4:
      break;
  }
  return "TB4";
}

namespace {

using concepts::SyntaxNode;
using concepts::SyntaxTree;

bool IsTrivia(const SyntaxNode& n) {
  return n.leaf && (n.type == "newline" || n.type == "whitespace" || n.type == "indent");
}

size_t LineStart(std::string_view text, size_t offset) {
  if (offset == 0) return 0;
  const size_t nl = text.rfind('\n', offset - 1);
  return nl == std::string_view::npos ? 0 : nl + 1;
}

}  // namespace

MethodLayout AnalyzeMethod(std::string_view source) {
  const SyntaxTree tree = concepts::ParsePython(source);
  int func = -1;
  size_t start = 0;
  for (int child : tree.node(0).children) {
    const SyntaxNode& n = tree.node(child);
    if (n.type == "function_definition") {
      func = child;
      start = n.span.begin;
    } else if (n.type == "decorated_definition") {
      for (int inner : n.children) {
        if (tree.node(inner).type == "function_definition") {
          func = inner;
          start = n.span.begin;
        }
      }
    }
    if (func >= 0) break;
  }
  if (func < 0) Fail(ErrorCode::kMissingSignature, "no function definition found");

  int block = -1;
  for (int child : tree.node(func).children) {
    if (tree.node(child).type == "block") block = child;
  }
  if (block < 0 || tree.node(block).children.empty()) {
    Fail(ErrorCode::kMissingSignature, "function has no body");
  }
  const SyntaxNode& first = tree.node(tree.node(block).children.front());
  if (!(first.leaf && first.type == "newline")) {
    Fail(ErrorCode::kBodyTooShort, "function body shares the header line");
  }
  MethodLayout layout;
  layout.signature = {start, first.span.end};
  for (const ByteSpan& error : tree.error_spans()) {
    if (error.begin < layout.signature.end && error.end > layout.signature.begin) {
      Fail(ErrorCode::kMissingSignature, "function header does not parse");
    }
  }

  for (int child : tree.node(block).children) {
    const SyntaxNode& stmt = tree.node(child);
    if (IsTrivia(stmt)) continue;
    if (stmt.type == "expression_statement") {
      std::vector<int> parts;
      for (int c : stmt.children) {
        if (!IsTrivia(tree.node(c))) parts.push_back(c);
      }
      if (parts.size() == 1 && (tree.node(parts[0]).type == "string" ||
                                tree.node(parts[0]).type == "concatenated_string")) {
        layout.docstring = tree.node(parts[0]).span;
      }
    }
    break;
  }

  size_t end = tree.node(func).span.end;
  if (end > 0 && end < source.size() && source[end - 1] != '\n' && source[end] == '\n') ++end;
  const size_t doc_line =
      layout.docstring ? LineStart(source, layout.docstring->begin) : source.size() + 1;
  std::vector<size_t> starts;
  for (size_t s : concepts::PythonLogicalLineStarts(source)) {
    if (s >= layout.signature.end && s < end && s != doc_line) starts.push_back(s);
  }
  for (size_t i = 0; i < starts.size(); ++i) {
    layout.body_lines.push_back({starts[i], i + 1 < starts.size() ? starts[i + 1] : end});
  }
  return layout;
}

std::string DocstringText(std::string_view source, const MethodLayout& layout) {
  if (!layout.docstring) Fail(ErrorCode::kMissingDocstring, "function has no docstring");
  const ByteSpan span = *layout.docstring;
  const size_t column = span.begin - LineStart(source, span.begin);
  std::string out;
  size_t pos = span.begin;
  bool first = true;
  while (pos < span.end) {
    size_t nl = source.find('\n', pos);
    const size_t line_end = std::min(nl == std::string_view::npos ? span.end : nl + 1, span.end);
    size_t skip = pos;
    if (!first) {
      while (skip < line_end && skip - pos < column && (source[skip] == ' ' || source[skip] == '\t')) {
        ++skip;
      }
    }
    out.append(source.substr(skip, line_end - skip));
    pos = line_end;
    first = false;
  }
  out += '\n';
  return out;
}

size_t TruncationCut(size_t body_lines, uint64_t seed) {
  if (body_lines < 2) {
    Fail(ErrorCode::kBodyTooShort,
         "body has " + std::to_string(body_lines) + " line(s); truncation needs at least 2");
  }
  Rng rng(DeriveSeed(seed, {body_lines}));
  return static_cast<size_t>(rng.UniformInt(2, static_cast<int64_t>(body_lines)));
}

Prompt MakePrompt(std::string_view source, PromptStyle style, uint64_t seed) {
  const MethodLayout layout = AnalyzeMethod(source);
  const std::string signature(source.substr(layout.signature.begin, layout.signature.size()));
  Prompt prompt;
  if (style != PromptStyle::kTB1 && !layout.docstring) {
    Fail(ErrorCode::kMissingDocstring, "prompt style needs a docstring");
  }
  switch (style) {
    case PromptStyle::kTB1:
    case PromptStyle::kTB2: {
      prompt.cut = TruncationCut(layout.body_lines.size(), seed);
      const size_t body_begin = layout.body_lines.front().begin;
      const size_t body_end = layout.body_lines[prompt.cut - 1].begin;
      prompt.text = signature + std::string(source.substr(body_begin, body_end - body_begin));
      if (style == PromptStyle::kTB2) prompt.text = DocstringText(source, layout) + prompt.text;
      break;
    }
    case PromptStyle::kTB3:
      prompt.text = DocstringText(source, layout) + signature;
      break;
    case PromptStyle::kTB4:
      prompt.text = DocstringText(source, layout);
      break;
  }
  return prompt;
}

}  // namespace ratex::testbed
