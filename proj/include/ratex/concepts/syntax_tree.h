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

#ifndef RATEX_CONCEPTS_SYNTAX_TREE_H_
#define RATEX_CONCEPTS_SYNTAX_TREE_H_

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ratex/model/code_tokenizer.h"

namespace ratex::concepts {

using model::ByteSpan;

enum class Language { kPython, kJava };

// Throws kUnsupportedLanguage for anything but "python" / "java".
Language ParseLanguage(std::string_view name);
std::string_view LanguageName(Language language);

// Leaf type given to tokens inside parse-error regions or outside any node.
inline constexpr std::string_view kErrorNodeType = "ERROR";
// Leaf type for words inside comments, strings and docstrings; these are
// routed to the part-of-speech tagger.
inline constexpr std::string_view kNaturalLanguageWord = "nl_word";

struct SyntaxNode {
  std::string type;
  ByteSpan span;
  int parent = -1;
  std::vector<int> children;
  bool leaf = false;
};

// Concrete syntax tree including trivia leaves (whitespace, newlines,
// indentation, comment and string internals), so every byte of a well-formed
// input lies in some leaf. Node 0 is the root.
class SyntaxTree {
 public:
  explicit SyntaxTree(std::string root_type, size_t text_size);

  int AddNode(std::string type, int parent);
  int AddLeaf(std::string type, ByteSpan span, int parent);
  // Inserts a new node of `type` between `child` and its parent, keeping the
  // child's slot in the parent's child list.
  int Wrap(int child, std::string type);
  // Drops every node with index >= mark and unlinks them from survivors.
  void Truncate(size_t mark);
  void Reparent(int node, int new_parent);
  void AddErrorSpan(ByteSpan span);

  // Computes composite spans and builds the leaf index. Call once after
  // construction.
  void Finalize();

  const SyntaxNode& node(int index) const { return nodes_[static_cast<size_t>(index)]; }
  SyntaxNode& mutable_node(int index) { return nodes_[static_cast<size_t>(index)]; }
  size_t size() const { return nodes_.size(); }
  const std::vector<ByteSpan>& error_spans() const { return error_spans_; }

  // Leaf whose span contains `offset`, or -1.
  int LeafAt(size_t offset) const;
  bool InErrorRegion(size_t offset) const;
  // Smallest ancestor-or-self of `node` whose span contains `span`, or -1.
  int Enclosing(int node, ByteSpan span) const;
  // Nearest ancestor-or-self with the given type, or -1.
  int AncestorOfType(int node, std::string_view type) const;

 private:
  std::vector<SyntaxNode> nodes_;
  std::vector<int> leaves_;
  std::vector<ByteSpan> error_spans_;
  size_t text_size_;
};

// Splits natural-language text (comment or string contents) into leaves of
// type kNaturalLanguageWord, "whitespace", "newline" and `punct_type`.
// Backslash escapes form a single punctuation leaf.
void AddNaturalLanguagePieces(SyntaxTree& tree, std::string_view text,
                              ByteSpan range, int parent,
                              std::string_view punct_type);

struct AlignedToken {
  int node = -1;  // -1 for ERROR
  std::string node_type;
  std::string parent_type;
  ByteSpan node_span;
  bool natural_language = false;
};

// Maps each token span onto the syntax leaf containing its midpoint. Tokens
// not contained in that leaf use the smallest enclosing ancestor instead;
// tokens in error regions or outside every node get kErrorNodeType.
std::vector<AlignedToken> AlignTokens(const SyntaxTree& tree,
                                      std::span<const ByteSpan> tokens);

}  // namespace ratex::concepts

#endif  // RATEX_CONCEPTS_SYNTAX_TREE_H_
