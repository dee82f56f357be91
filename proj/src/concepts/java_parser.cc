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

#include "ratex/concepts/java_parser.h"

#include <algorithm>
#include <array>
#include <cctype>
#include <string>
#include <vector>

namespace ratex::concepts {
namespace {

enum class Kind { kWord, kNumber, kString, kChar, kOp, kComment, kSpace, kNewline };

struct Tok {
  Kind kind;
  ByteSpan span;
  std::string_view text;
  bool line_start = false;  // whitespace that begins a line
};

bool IsWordStart(unsigned char c) {
  return std::isalpha(c) || c == '_' || c == '$' || c >= 0x80;
}
bool IsWordChar(unsigned char c) { return IsWordStart(c) || std::isdigit(c); }

// ">>" and ">>>" are absent so that nested generics close one '>' at a
// time; shifts become repeated '>' leaves.
constexpr std::array<std::string_view, 4> kOps3 = {">>>=", "<<=", ">>=", "..."};
constexpr std::array<std::string_view, 19> kOps2 = {
    "++", "--", "&&", "||", "==", "!=", "<=", ">=", "+=",
    "-=", "*=", "/=", "%=", "&=", "|=", "^=", "<<", "->", "::"};
struct Lexed {
  std::vector<Tok> toks;
  std::vector<ByteSpan> errors;
};

Lexed LexJava(std::string_view text) {
  Lexed out;
  size_t i = 0;
  bool at_line_start = true;
  auto push = [&](Kind kind, size_t begin, size_t end) {
    Tok tok{kind, {begin, end}, text.substr(begin, end - begin)};
    tok.line_start = at_line_start && kind == Kind::kSpace;
    out.toks.push_back(tok);
    at_line_start = kind == Kind::kNewline;
  };
  while (i < text.size()) {
    const size_t start = i;
    const unsigned char c = static_cast<unsigned char>(text[i]);
    if (c == '\n') {
      push(Kind::kNewline, i, i + 1);
      ++i;
    } else if (c == '\r' && i + 1 < text.size() && text[i + 1] == '\n') {
      push(Kind::kNewline, i, i + 2);
      i += 2;
    } else if (c == ' ' || c == '\t' || c == '\f' || c == '\r') {
      while (i < text.size() && (text[i] == ' ' || text[i] == '\t' ||
                                 text[i] == '\f' || text[i] == '\r')) {
        if (text[i] == '\r' && i + 1 < text.size() && text[i + 1] == '\n') break;
        ++i;
      }
      push(Kind::kSpace, start, i);
    } else if (text.compare(i, 2, "//") == 0) {
      while (i < text.size() && text[i] != '\n' && text[i] != '\r') ++i;
      push(Kind::kComment, start, i);
    } else if (text.compare(i, 2, "/*") == 0) {
      const size_t close = text.find("*/", i + 2);
      i = close == std::string_view::npos ? text.size() : close + 2;
      if (close == std::string_view::npos) out.errors.push_back({start, i});
      push(Kind::kComment, start, i);
    } else if (IsWordStart(c)) {
      while (i < text.size() && IsWordChar(static_cast<unsigned char>(text[i]))) ++i;
      push(Kind::kWord, start, i);
    } else if (std::isdigit(c) ||
               (c == '.' && i + 1 < text.size() &&
                std::isdigit(static_cast<unsigned char>(text[i + 1])))) {
      while (i < text.size()) {
        const unsigned char d = static_cast<unsigned char>(text[i]);
        if (std::isalnum(d) || d == '_' || d == '.') {
          ++i;
        } else if ((d == '+' || d == '-') && (text[i - 1] == 'e' || text[i - 1] == 'E') &&
                   !(text.size() > start + 1 && (text[start + 1] == 'x' || text[start + 1] == 'X'))) {
          ++i;
        } else {
          break;
        }
      }
      push(Kind::kNumber, start, i);
    } else if (text.compare(i, 3, "\"\"\"") == 0) {
      const size_t close = text.find("\"\"\"", i + 3);
      i = close == std::string_view::npos ? text.size() : close + 3;
      if (close == std::string_view::npos) out.errors.push_back({start, i});
      push(Kind::kString, start, i);
    } else if (c == '"' || c == '\'') {
      ++i;
      bool closed = false;
      while (i < text.size() && text[i] != '\n') {
        if (text[i] == '\\') {
          i += 2;
          continue;
        }
        if (text[i] == static_cast<char>(c)) {
          ++i;
          closed = true;
          break;
        }
        ++i;
      }
      i = std::min(i, text.size());
      if (!closed) out.errors.push_back({start, i});
      push(c == '"' ? Kind::kString : Kind::kChar, start, i);
    } else {
      size_t len = 1;
      for (auto op : kOps3) {
        if (text.compare(i, op.size(), op) == 0) {
          len = op.size();
          break;
        }
      }
      if (len == 1) {
        for (auto op : kOps2) {
          if (text.compare(i, 2, op) == 0) {
            len = 2;
            break;
          }
        }
      }
      i += len;
      push(Kind::kOp, start, i);
    }
  }
  return out;
}

bool IsKeyword(std::string_view w) {
  static constexpr std::array<std::string_view, 51> kKeywords = {
      "abstract", "assert", "boolean", "break", "byte", "case", "catch",
      "char", "class", "const", "continue", "default", "do", "double",
      "else", "enum", "extends", "final", "finally", "float", "for", "goto",
      "if", "implements", "import", "instanceof", "int", "interface", "long",
      "native", "new", "package", "private", "protected", "public", "return",
      "short", "static", "strictfp", "super", "switch", "synchronized",
      "this", "throw", "throws", "transient", "try", "void", "volatile",
      "while", "var"};
  for (auto k : kKeywords) {
    if (k == w) return true;
  }
  return false;
}

bool IsModifier(std::string_view w) {
  return w == "public" || w == "protected" || w == "private" || w == "static" ||
         w == "abstract" || w == "final" || w == "native" || w == "synchronized" ||
         w == "transient" || w == "volatile" || w == "strictfp" || w == "default" ||
         w == "sealed" || w == "non-sealed";
}

std::string_view TypeDeclarationNode(std::string_view keyword) {
  if (keyword == "class") return "class_declaration";
  if (keyword == "interface") return "interface_declaration";
  if (keyword == "enum") return "enum_declaration";
  return "record_declaration";
}

class Parser {
 public:
  Parser(std::string_view text, const std::vector<Tok>& toks, SyntaxTree& tree)
      : text_(text), toks_(toks), tree_(tree) {
    for (size_t i = 0; i < toks.size(); ++i) {
      if (toks[i].kind != Kind::kSpace && toks[i].kind != Kind::kNewline &&
          toks[i].kind != Kind::kComment) {
        sig_.push_back(i);
      }
    }
  }

  void ParseUnit() {
    cur_ = 0;
    while (!AtEnd()) {
      if (IsWord("package")) {
        Statement("package_declaration");
      } else if (IsWord("import")) {
        Statement("import_declaration");
      } else if (Is(";")) {
        Consume();
      } else if (IsTypeDeclaration(SkipModifiers(0))) {
        TypeDeclaration();
      } else {
        StrayTokens();
      }
    }
    EmitTrivia(toks_.size());
  }

 private:
  // ---- significant-token cursor -------------------------------------------

  bool AtEnd(size_t k = 0) const { return pos_ + k >= sig_.size(); }
  const Tok& Sig(size_t k = 0) const { return toks_[sig_[pos_ + k]]; }
  bool Is(std::string_view text, size_t k = 0) const {
    return !AtEnd(k) && Sig(k).kind == Kind::kOp && Sig(k).text == text;
  }
  bool IsWord(std::string_view text, size_t k = 0) const {
    return !AtEnd(k) && Sig(k).kind == Kind::kWord && Sig(k).text == text;
  }

  // Index (relative to pos_) just past any annotations and modifiers.
  size_t SkipModifiers(size_t k) const {
    for (;;) {
      if (Is("@", k) && !IsWord("interface", k + 1)) {
        k += 2;
        while (Is(".", k)) k += 2;
        if (Is("(", k)) k = SkipBalanced(k);
      } else if (!AtEnd(k) && Sig(k).kind == Kind::kWord && IsModifier(Sig(k).text) &&
                 !(Sig(k).text == "default" && Is(":", k + 1))) {
        ++k;
      } else {
        return k;
      }
    }
  }

  // `k` is at an opening bracket; returns the index just past its match (or
  // the end of input).
  size_t SkipBalanced(size_t k) const {
    int depth = 0;
    for (; !AtEnd(k); ++k) {
      const Tok& t = Sig(k);
      if (t.kind != Kind::kOp) continue;
      if (t.text == "(" || t.text == "[" || t.text == "{") ++depth;
      if (t.text == ")" || t.text == "]" || t.text == "}") {
        if (--depth == 0) return k + 1;
      }
    }
    return k;
  }

  bool IsTypeDeclaration(size_t k) const {
    if (Is("@", k) && IsWord("interface", k + 1)) return true;
    return IsWord("class", k) || IsWord("interface", k) || IsWord("enum", k) ||
           (IsWord("record", k) && !AtEnd(k + 1) && Sig(k + 1).kind == Kind::kWord);
  }

  // ---- emission ------------------------------------------------------------

  void EmitTrivia(size_t until) {
    for (; raw_ < until; ++raw_) EmitRaw(toks_[raw_]);
  }

  void Consume() {
    const size_t index = sig_[pos_++];
    EmitTrivia(index);
    EmitRaw(toks_[index]);
    raw_ = index + 1;
  }

  void EmitRaw(const Tok& t) {
    switch (t.kind) {
      case Kind::kSpace:
        tree_.AddLeaf(t.line_start ? "indent" : "whitespace", t.span, cur_);
        return;
      case Kind::kNewline:
        tree_.AddLeaf("newline", t.span, cur_);
        return;
      case Kind::kComment:
        return EmitComment(t);
      case Kind::kString:
        return EmitString(t);
      case Kind::kChar:
        tree_.AddLeaf("character_literal", t.span, cur_);
        return;
      case Kind::kNumber:
        tree_.AddLeaf(NumberType(t.text), t.span, cur_);
        return;
      case Kind::kWord:
        tree_.AddLeaf(WordType(t.text), t.span, cur_);
        return;
      case Kind::kOp:
        tree_.AddLeaf(std::string(t.text), t.span, cur_);
        return;
    }
  }

  static std::string WordType(std::string_view w) {
    if (w == "true" || w == "false") return std::string(w);
    if (w == "null") return "null_literal";
    if (w == "int" || w == "long" || w == "short" || w == "byte" || w == "char") {
      return "integral_type";
    }
    if (w == "float" || w == "double") return "floating_point_type";
    if (w == "boolean") return "boolean_type";
    if (w == "void") return "void_type";
    if (IsKeyword(w)) return std::string(w);
    return "identifier";
  }

  static std::string NumberType(std::string_view n) {
    const bool hex = n.size() > 1 && n[0] == '0' && (n[1] == 'x' || n[1] == 'X');
    if (hex) return "hex_integer_literal";
    const bool binary = n.size() > 1 && n[0] == '0' && (n[1] == 'b' || n[1] == 'B');
    if (binary) return "binary_integer_literal";
    const char last = n.empty() ? ' ' : n.back();
    if (n.find_first_of(".eE") != std::string_view::npos || last == 'f' ||
        last == 'F' || last == 'd' || last == 'D') {
      return "decimal_floating_point_literal";
    }
    return "decimal_integer_literal";
  }

  void EmitString(const Tok& t) {
    const int node = tree_.AddNode("string_literal", cur_);
    const size_t quote = t.text.rfind("\"\"\"", 0) == 0 ? 3 : 1;
    const bool closed = t.text.size() >= 2 * quote &&
                        t.text.substr(t.text.size() - quote) == t.text.substr(0, quote);
    const size_t content_begin = t.span.begin + quote;
    const size_t content_end = closed ? t.span.end - quote : t.span.end;
    tree_.AddLeaf("string_start", {t.span.begin, content_begin}, node);
    AddNaturalLanguagePieces(tree_, text_, {content_begin, std::max(content_begin, content_end)},
                             node, "string_punct");
    if (closed) tree_.AddLeaf("string_end", {content_end, t.span.end}, node);
  }

  void EmitComment(const Tok& t) {
    const bool line = t.text.rfind("//", 0) == 0;
    const int node = tree_.AddNode(line ? "line_comment" : "block_comment", cur_);
    size_t open = 2;
    if (!line && t.text.rfind("/**", 0) == 0 && t.text != "/**/") open = 3;
    const bool closed = !line && t.text.size() >= open + 2 &&
                        t.text.substr(t.text.size() - 2) == "*/";
    const size_t content_end = closed ? t.span.end - 2 : t.span.end;
    tree_.AddLeaf("comment_marker", {t.span.begin, t.span.begin + open}, node);
    AddNaturalLanguagePieces(tree_, text_, {t.span.begin + open, content_end}, node,
                             "comment_punct");
    if (closed) tree_.AddLeaf("comment_marker", {content_end, t.span.end}, node);
  }

  // ---- structure -----------------------------------------------------------

  class Enter {
   public:
    Enter(Parser* p, int node) : p_(p), saved_(p->cur_) { p_->cur_ = node; }
    ~Enter() { p_->cur_ = saved_; }

   private:
    Parser* p_;
    int saved_;
  };

  int Open(std::string_view type) {
    EmitTrivia(AtEnd() ? toks_.size() : sig_[pos_]);
    return tree_.AddNode(std::string(type), cur_);
  }

  void Statement(std::string_view type) {
    Enter e(this, Open(type));
    while (!AtEnd() && !Is(";")) Consume();
    if (!AtEnd()) Consume();
  }

  void StrayTokens() {
    const size_t begin = Sig().span.begin;
    Enter e(this, Open("ERROR"));
    size_t end = begin;
    do {
      end = Sig().span.end;
      if (Is("{")) {
        Block();
        end = toks_[raw_ - 1].span.end;
        break;
      }
      const bool semicolon = Is(";");
      Consume();
      if (semicolon) break;
    } while (!AtEnd() && !IsTypeDeclaration(SkipModifiers(0)));
    tree_.AddErrorSpan({begin, end});
  }

  void Modifiers() {
    if (SkipModifiers(0) == 0) return;
    Enter e(this, Open("modifiers"));
    const size_t end = pos_ + SkipModifiers(0);
    while (pos_ < end) {
      if (Is("@")) {
        size_t k = 2;
        while (Is(".", k)) k += 2;
        const size_t stop = pos_ + AnnotationLength();
        Enter a(this, Open(Is("(", k) ? "annotation" : "marker_annotation"));
        while (pos_ < stop) Consume();
      } else {
        Consume();
      }
    }
  }

  // Number of significant tokens in the annotation at pos_.
  size_t AnnotationLength() const {
    size_t k = 2;
    while (Is(".", k)) k += 2;
    if (Is("(", k)) k = SkipBalanced(k);
    return k;
  }

  void TypeDeclaration() {
    const size_t k = SkipModifiers(0);
    std::string_view node_type = Is("@", k) ? std::string_view("annotation_type_declaration")
                                            : TypeDeclarationNode(Sig(k).text);
    Enter e(this, Open(node_type));
    const bool is_enum = IsWord("enum", k);
    Modifiers();
    if (Is("@")) Consume();
    Consume();  // keyword
    if (!AtEnd() && Sig().kind == Kind::kWord) Consume();
    while (!AtEnd() && !Is("{") && !Is(";") && !Is("}")) {
      if (Is("(")) {
        Enter p(this, Open("formal_parameters"));
        const size_t end = pos_ + SkipBalanced(0);
        while (pos_ < end) Consume();
      } else {
        Consume();
      }
    }
    if (Is("{")) ClassBody(is_enum);
  }

  void ClassBody(bool is_enum) {
    Enter e(this, Open(is_enum ? "enum_body" : "class_body"));
    Consume();  // {
    if (is_enum) EnumConstants();
    while (!AtEnd() && !Is("}")) Member();
    if (!AtEnd()) Consume();
  }

  void EnumConstants() {
    while (!AtEnd() && !Is(";") && !Is("}")) {
      if (Is(",")) {
        Consume();
        continue;
      }
      Enter c(this, Open("enum_constant"));
      Modifiers();
      if (!AtEnd() && Sig().kind == Kind::kWord) Consume();
      if (Is("(")) {
        Enter a(this, Open("argument_list"));
        const size_t end = pos_ + SkipBalanced(0);
        while (pos_ < end) Consume();
      }
      if (Is("{")) ClassBody(false);
      if (!AtEnd() && !Is(",") && !Is(";") && !Is("}")) Consume();
    }
    if (Is(";")) Consume();
  }

  void Member() {
    if (Is(";")) return Consume();
    const size_t k = SkipModifiers(0);
    if (IsTypeDeclaration(k)) return TypeDeclaration();
    if (Is("{", k)) {
      Enter e(this, Open(k > 0 ? "static_initializer" : "block_initializer"));
      Modifiers();
      Block();
      return;
    }
    // Find the first '(' , '=', ';' or '{' at bracket depth zero.
    size_t j = k;
    while (!AtEnd(j)) {
      if (Is("(", j) || Is("=", j) || Is(";", j) || Is("{", j) || Is("}", j)) break;
      if (Is("[", j)) {
        j = SkipBalanced(j);
        continue;
      }
      ++j;
    }
    if (Is("(", j) && j > k && Sig(j - 1).kind == Kind::kWord) {
      // A constructor has no return type: the name directly follows the
      // modifiers and optional type parameters.
      size_t first = k;
      if (Is("<", first)) {
        int depth = 0;
        for (; !AtEnd(first); ++first) {
          if (Is("<", first)) ++depth;
          if (Is(">", first) && --depth == 0) {
            ++first;
            break;
          }
        }
      }
      const bool constructor = first == j - 1;
      Callable(constructor ? "constructor_declaration" : "method_declaration", j);
      return;
    }
    Field();
  }

  void Callable(std::string_view type, size_t paren) {
    Enter e(this, Open(type));
    const size_t paren_abs = pos_ + paren;
    Modifiers();
    while (pos_ < paren_abs) Consume();
    {
      Enter p(this, Open("formal_parameters"));
      const size_t end = pos_ + SkipBalanced(0);
      while (pos_ < end) Consume();
    }
    while (!AtEnd() && !Is("{") && !Is(";") && !Is("}")) Consume();
    if (Is("{")) {
      Block(type == "constructor_declaration" ? "constructor_body" : "block");
    } else if (Is(";")) {
      Consume();
    }
  }

  void Field() {
    Enter e(this, Open("field_declaration"));
    Modifiers();
    while (!AtEnd() && !Is(";") && !Is("}")) {
      if (Is("{")) {
        Block("array_initializer");
      } else {
        Consume();
      }
    }
    if (Is(";")) Consume();
  }

  // A brace-delimited token group; nested braces open nested blocks. A
  // block left open at end of input is closed implicitly.
  void Block(std::string_view type = "block") {
    Enter e(this, Open(type));
    Consume();  // {
    while (!AtEnd() && !Is("}")) {
      if (Is("{")) {
        Block();
      } else {
        Consume();
      }
    }
    if (!AtEnd()) Consume();
  }

  std::string_view text_;
  const std::vector<Tok>& toks_;
  SyntaxTree& tree_;
  std::vector<size_t> sig_;
  size_t pos_ = 0;  // into sig_
  size_t raw_ = 0;  // next raw token to emit
  int cur_ = 0;
};

}  // namespace

SyntaxTree ParseJava(std::string_view text) {
  const Lexed lexed = LexJava(text);
  SyntaxTree tree("program", text.size());
  Parser(text, lexed.toks, tree).ParseUnit();
  for (const ByteSpan& error : lexed.errors) tree.AddErrorSpan(error);
  tree.Finalize();
  return tree;
}

}  // namespace ratex::concepts
