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

#include "ratex/concepts/context_levels.h"

#include "ratex/common/errors.h"
#include "ratex/concepts/java_parser.h"

namespace ratex::concepts {
namespace {

// Name of a method_declaration: the identifier leaf right before its
// formal_parameters child.
std::string_view MethodName(const SyntaxTree& tree, int method, std::string_view text) {
  const auto& children = tree.node(method).children;
  for (size_t i = 1; i < children.size(); ++i) {
    if (tree.node(children[i]).type != "formal_parameters") continue;
    for (size_t j = i; j-- > 0;) {
      const SyntaxNode& n = tree.node(children[j]);
      if (n.type == "identifier") return text.substr(n.span.begin, n.span.size());
      if (n.leaf && (n.type == "whitespace" || n.type == "newline" || n.type == "indent")) {
        continue;
      }
      break;
    }
  }
  return {};
}

bool IsTypeDeclaration(std::string_view type) {
  return type == "class_declaration" || type == "interface_declaration" ||
         type == "enum_declaration" || type == "record_declaration" ||
         type == "annotation_type_declaration";
}

std::string_view LevelOf(const SyntaxTree& tree, int node, std::string_view text,
                         std::string_view focal) {
  for (int n = node; n >= 0; n = tree.node(n).parent) {
    const std::string& type = tree.node(n).type;
    if (type == "line_comment" || type == "block_comment") return kLevelComment;
  }
  for (int n = node; n >= 0; n = tree.node(n).parent) {
    const std::string& type = tree.node(n).type;
    if (type == "method_declaration") {
      return MethodName(tree, n, text) == focal ? kLevelFocalMethod : kLevelOtherMethod;
    }
    if (type == "constructor_declaration") return kLevelConstructor;
    if (type == "field_declaration" || type == "enum_constant" ||
        type == "static_initializer" || type == "block_initializer") {
      return kLevelClassFields;
    }
    if (IsTypeDeclaration(type)) return kLevelClassDeclaration;
  }
  return kLevelImports;
}

}  // namespace

std::vector<std::string> ContextLevels(std::string_view java_text,
                                       std::span<const ByteSpan> tokens,
                                       std::string_view focal_method) {
  const SyntaxTree tree = ParseJava(java_text);
  bool found = false;
  for (size_t i = 0; i < tree.size() && !found; ++i) {
    found = tree.node(static_cast<int>(i)).type == "method_declaration" &&
            MethodName(tree, static_cast<int>(i), java_text) == focal_method;
  }
  if (!found) {
    Fail(ErrorCode::kFocalMethodNotFound,
         "no method named '" + std::string(focal_method) + "'");
  }
  std::vector<std::string> levels;
  levels.reserve(tokens.size());
  for (const ByteSpan& token : tokens) {
    int node = tree.LeafAt(token.midpoint());
    if (node >= 0) node = tree.Enclosing(node, token);
    levels.emplace_back(node < 0 ? kLevelImports : LevelOf(tree, node, java_text, focal_method));
  }
  return levels;
}

std::vector<LabeledToken> LabelContextLevels(std::string_view java_text,
                                             std::span<const ByteSpan> tokens,
                                             std::string_view focal_method,
                                             const Taxonomy& taxonomy) {
  const std::vector<std::string> levels = ContextLevels(java_text, tokens, focal_method);
  std::vector<LabeledToken> out;
  out.reserve(tokens.size());
  for (size_t i = 0; i < tokens.size(); ++i) {
    LabeledToken token;
    token.position = i;
    token.span = tokens[i];
    token.text = std::string(java_text.substr(tokens[i].begin, tokens[i].size()));
    if (auto label = taxonomy.ForLevel(levels[i])) {
      token.label = *label;
      token.provenance = Provenance::kLevel;
      token.context_level = levels[i];
    } else {
      token.label = taxonomy.fallback();
    }
    out.push_back(std::move(token));
  }
  return out;
}

}  // namespace ratex::concepts
