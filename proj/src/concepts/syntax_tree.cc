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

#include "ratex/concepts/syntax_tree.h"

#include <algorithm>
#include <limits>

#include "ratex/common/errors.h"

namespace ratex::concepts {

Language ParseLanguage(std::string_view name) {
  if (name == "python") return Language::kPython;
  if (name == "java") return Language::kJava;
  Fail(ErrorCode::kUnsupportedLanguage,
       "language \"" + std::string(name) + "\" is not supported");
}

std::string_view LanguageName(Language language) {
  return language == Language::kPython ? "python" : "java";
}

SyntaxTree::SyntaxTree(std::string root_type, size_t text_size)
    : text_size_(text_size) {
  nodes_.push_back({std::move(root_type), {0, text_size}, -1, {}, false});
}

int SyntaxTree::AddNode(std::string type, int parent) {
  const int index = static_cast<int>(nodes_.size());
  nodes_.push_back({std::move(type), {0, 0}, parent, {}, false});
  if (parent >= 0) nodes_[static_cast<size_t>(parent)].children.push_back(index);
  return index;
}

int SyntaxTree::AddLeaf(std::string type, ByteSpan span, int parent) {
  const int index = AddNode(std::move(type), parent);
  nodes_.back().span = span;
  nodes_.back().leaf = true;
  return index;
}

int SyntaxTree::Wrap(int child, std::string type) {
  const int parent = node(child).parent;
  const int index = static_cast<int>(nodes_.size());
  nodes_.push_back({std::move(type), {0, 0}, parent, {child}, false});
  if (parent >= 0) {
    auto& siblings = nodes_[static_cast<size_t>(parent)].children;
    std::replace(siblings.begin(), siblings.end(), child, index);
  }
  nodes_[static_cast<size_t>(child)].parent = index;
  return index;
}

void SyntaxTree::Reparent(int child, int new_parent) {
  const int old_parent = node(child).parent;
  if (old_parent >= 0) {
    auto& siblings = nodes_[static_cast<size_t>(old_parent)].children;
    siblings.erase(std::remove(siblings.begin(), siblings.end(), child),
                   siblings.end());
  }
  nodes_[static_cast<size_t>(child)].parent = new_parent;
  nodes_[static_cast<size_t>(new_parent)].children.push_back(child);
}

void SyntaxTree::Truncate(size_t mark) {
  // Wrap() can splice a new node above an older one, so relink any survivor
  // whose parent is about to disappear.
  for (size_t i = 0; i < mark && i < nodes_.size(); ++i) {
    int parent = nodes_[i].parent;
    while (parent >= static_cast<int>(mark)) {
      parent = nodes_[static_cast<size_t>(parent)].parent;
    }
    nodes_[i].parent = parent;
  }
  nodes_.resize(std::min(mark, nodes_.size()));
  for (auto& n : nodes_) {
    n.children.erase(
        std::remove_if(n.children.begin(), n.children.end(),
                       [&](int c) { return c >= static_cast<int>(mark); }),
        n.children.end());
  }
  for (size_t i = 1; i < nodes_.size(); ++i) {
    const int parent = nodes_[i].parent;
    if (parent < 0) continue;
    auto& siblings = nodes_[static_cast<size_t>(parent)].children;
    if (std::find(siblings.begin(), siblings.end(), static_cast<int>(i)) ==
        siblings.end()) {
      siblings.push_back(static_cast<int>(i));
    }
  }
}

void SyntaxTree::AddErrorSpan(ByteSpan span) {
  if (span.end > span.begin) error_spans_.push_back(span);
}

void SyntaxTree::Finalize() {
  // Children are always created after their parent except for Wrap(), so a
  // fixed-point pass in reverse index order is not enough; recurse instead.
  std::vector<int> order;
  std::vector<int> stack = {0};
  while (!stack.empty()) {
    const int n = stack.back();
    stack.pop_back();
    order.push_back(n);
    for (int c : node(n).children) stack.push_back(c);
  }
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    SyntaxNode& n = nodes_[static_cast<size_t>(*it)];
    if (n.leaf || *it == 0) continue;
    size_t begin = std::numeric_limits<size_t>::max();
    size_t end = 0;
    for (int c : n.children) {
      const ByteSpan& s = node(c).span;
      if (s.end <= s.begin && !node(c).leaf && node(c).children.empty()) continue;
      begin = std::min(begin, s.begin);
      end = std::max(end, s.end);
    }
    n.span = begin <= end ? ByteSpan{begin, end} : ByteSpan{0, 0};
  }
  nodes_[0].span = {0, text_size_};
  for (auto& n : nodes_) {
    std::sort(n.children.begin(), n.children.end(), [&](int a, int b) {
      return node(a).span.begin < node(b).span.begin;
    });
  }

  leaves_.clear();
  for (size_t i = 0; i < nodes_.size(); ++i) {
    if (nodes_[i].leaf && nodes_[i].span.end > nodes_[i].span.begin) {
      leaves_.push_back(static_cast<int>(i));
    }
  }
  std::sort(leaves_.begin(), leaves_.end(), [&](int a, int b) {
    return node(a).span.begin < node(b).span.begin;
  });
  std::sort(error_spans_.begin(), error_spans_.end(),
            [](const ByteSpan& a, const ByteSpan& b) { return a.begin < b.begin; });
}

int SyntaxTree::LeafAt(size_t offset) const {
  auto it = std::upper_bound(leaves_.begin(), leaves_.end(), offset,
                             [&](size_t off, int leaf) {
                               return off < node(leaf).span.begin;
                             });
  if (it == leaves_.begin()) return -1;
  const int leaf = *std::prev(it);
  return offset < node(leaf).span.end ? leaf : -1;
}

bool SyntaxTree::InErrorRegion(size_t offset) const {
  for (const ByteSpan& s : error_spans_) {
    if (s.begin <= offset && offset < s.end) return true;
  }
  return false;
}

int SyntaxTree::Enclosing(int n, ByteSpan span) const {
  while (n >= 0 && !node(n).span.Contains(span)) n = node(n).parent;
  return n;
}

int SyntaxTree::AncestorOfType(int n, std::string_view type) const {
  while (n >= 0 && node(n).type != type) n = node(n).parent;
  return n;
}

void AddNaturalLanguagePieces(SyntaxTree& tree, std::string_view text,
                              ByteSpan range, int parent,
                              std::string_view punct_type) {
  auto is_word = [](unsigned char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
           (c >= '0' && c <= '9') || c == '_' || c >= 0x80;
  };
  size_t i = range.begin;
  while (i < range.end) {
    const unsigned char c = static_cast<unsigned char>(text[i]);
    size_t j = i + 1;
    std::string type;
    if (is_word(c)) {
      while (j < range.end && is_word(static_cast<unsigned char>(text[j]))) ++j;
      type = std::string(kNaturalLanguageWord);
    } else if (c == ' ' || c == '\t') {
      while (j < range.end && (text[j] == ' ' || text[j] == '\t')) ++j;
      type = "whitespace";
    } else if (c == '\n') {
      type = "newline";
    } else if (c == '\r') {
      if (j < range.end && text[j] == '\n') ++j;
      type = "newline";
    } else {
      if (c == '\\' && j < range.end) ++j;
      type = std::string(punct_type);
    }
    tree.AddLeaf(std::move(type), {i, j}, parent);
    i = j;
  }
}

std::vector<AlignedToken> AlignTokens(const SyntaxTree& tree,
                                      std::span<const ByteSpan> tokens) {
  std::vector<AlignedToken> out;
  out.reserve(tokens.size());
  for (const ByteSpan& token : tokens) {
    AlignedToken aligned;
    const size_t mid = token.midpoint();
    const int leaf = tree.LeafAt(mid);
    if (leaf < 0 || tree.InErrorRegion(mid)) {
      aligned.node_type = std::string(kErrorNodeType);
      aligned.node_span = token;
      out.push_back(std::move(aligned));
      continue;
    }
    const int holder = tree.Enclosing(leaf, token);
    if (holder < 0) {
      aligned.node_type = std::string(kErrorNodeType);
      aligned.node_span = token;
    } else {
      const SyntaxNode& n = tree.node(holder);
      aligned.node = holder;
      aligned.node_type = n.type;
      aligned.node_span = n.span;
      aligned.parent_type = n.parent >= 0 ? tree.node(n.parent).type : "";
      aligned.natural_language = n.leaf && n.type == kNaturalLanguageWord;
    }
    out.push_back(std::move(aligned));
  }
  return out;
}

}  // namespace ratex::concepts
