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

#include "ratex/concepts/python_parser.h"

#include <algorithm>
#include <functional>
#include <string>
#include <vector>

#include "python_lexer.h"

namespace ratex::concepts {
namespace {

using python::Kind;
using python::Token;

struct ParseError {};

class Parser {
 public:
  Parser(std::string_view text, const python::LexResult& lex, SyntaxTree& tree)
      : text_(text), toks_(lex.tokens), tree_(tree) {}

  void ParseModule() {
    cur_ = 0;
    ParseStatements(/*until_dedent=*/false);
  }

 private:
  // Makes `node` the attachment point for new children while in scope.
  class Enter {
   public:
    Enter(Parser* p, int node) : p_(p), saved_(p->cur_) { p_->cur_ = node; }
    ~Enter() { p_->cur_ = saved_; }

   private:
    Parser* p_;
    int saved_;
  };

  // ---- token helpers -------------------------------------------------------

  const Token& At(size_t k = 0) const {
    const size_t i = std::min(pos_ + k, toks_.size() - 1);
    return toks_[i];
  }
  bool IsKind(Kind kind, size_t k = 0) const { return At(k).kind == kind; }
  bool IsOp(std::string_view op, size_t k = 0) const {
    return At(k).kind == Kind::kOp && At(k).text == op;
  }
  bool IsKw(std::string_view kw, size_t k = 0) const {
    return At(k).kind == Kind::kName && At(k).text == kw;
  }
  bool IsName(size_t k = 0) const {
    return At(k).kind == Kind::kName && !python::IsHardKeyword(At(k).text);
  }
  // Only DEDENTs remain.
  bool AtEndOfInput() const {
    for (size_t i = pos_; i < toks_.size(); ++i) {
      if (toks_[i].kind == Kind::kEnd) return true;
      if (toks_[i].kind != Kind::kDedent) return false;
    }
    return true;
  }
  bool AtLineEnd() const {
    return IsKind(Kind::kNewline) || IsKind(Kind::kEnd);
  }

  bool StartsExpression(size_t k = 0) const {
    const Token& t = At(k);
    switch (t.kind) {
      case Kind::kNumber:
      case Kind::kString:
        return true;
      case Kind::kName:
        return !python::IsHardKeyword(t.text) || t.text == "True" ||
               t.text == "False" || t.text == "None" || t.text == "lambda" ||
               t.text == "not" || t.text == "await" || t.text == "yield";
      case Kind::kOp:
        return t.text == "(" || t.text == "[" || t.text == "{" ||
               t.text == "-" || t.text == "+" || t.text == "~" ||
               t.text == "*" || t.text == "**" || t.text == "...";
      default:
        return false;
    }
  }

  static std::string LeafType(const Token& t) {
    switch (t.kind) {
      case Kind::kName:
        if (t.text == "True") return "true";
        if (t.text == "False") return "false";
        if (t.text == "None") return "none";
        if (python::IsHardKeyword(t.text)) return std::string(t.text);
        return "identifier";
      case Kind::kNumber: {
        const bool hex = t.text.size() > 1 && t.text[0] == '0' &&
                         (t.text[1] == 'x' || t.text[1] == 'X');
        const bool is_float =
            t.text.find('.') != std::string_view::npos ||
            t.text.find('j') != std::string_view::npos ||
            t.text.find('J') != std::string_view::npos ||
            (!hex && (t.text.find('e') != std::string_view::npos ||
                      t.text.find('E') != std::string_view::npos));
        return is_float ? "float" : "integer";
      }
      case Kind::kNewline:
        return "newline";
      case Kind::kOp:
        return t.text == "..." ? "ellipsis" : std::string(t.text);
      default:
        return "ERROR";
    }
  }

  // Consumes the current token as a leaf (or a string subtree) under cur_.
  int Leaf() {
    const Token& t = At();
    if (t.kind == Kind::kEnd || t.kind == Kind::kIndent || t.kind == Kind::kDedent) {
      throw ParseError{};
    }
    ++pos_;
    if (t.kind == Kind::kString) return StringNode(t);
    if (t.span.size() == 0) return cur_;  // NEWLINE synthesized at end of input
    return tree_.AddLeaf(LeafType(t), t.span, cur_);
  }

  int StringNode(const Token& t) {
    const int node = tree_.AddNode("string", cur_);
    const size_t content_begin = t.span.begin + t.open_len;
    const size_t content_end = std::max(content_begin, t.span.end - t.close_len);
    tree_.AddLeaf("string_start", {t.span.begin, content_begin}, node);
    AddNaturalLanguagePieces(tree_, text_, {content_begin, content_end}, node,
                             "string_punct");
    if (t.close_len > 0) tree_.AddLeaf("string_end", {content_end, t.span.end}, node);
    return node;
  }

  void ExpectOp(std::string_view op) {
    if (!IsOp(op)) throw ParseError{};
    Leaf();
  }
  void ExpectKw(std::string_view kw) {
    if (!IsKw(kw)) throw ParseError{};
    Leaf();
  }
  int ExpectName() {
    if (!IsName()) throw ParseError{};
    return Leaf();
  }
  int Open(std::string type) { return tree_.AddNode(std::move(type), cur_); }
  void Rename(int node, std::string type) { tree_.mutable_node(node).type = std::move(type); }

  // ---- statements ----------------------------------------------------------

  void ParseStatements(bool until_dedent) {
    for (;;) {
      if (IsKind(Kind::kEnd)) return;
      if (IsKind(Kind::kDedent)) {
        if (until_dedent) return;
        ++pos_;
        continue;
      }
      if (IsKind(Kind::kNewline)) {
        Leaf();
        continue;
      }
      if (IsKind(Kind::kIndent)) {
        UnexpectedIndent();
        continue;
      }
      Guarded([this] { ParseStatement(); });
    }
  }

  void UnexpectedIndent() {
    ++pos_;
    const size_t first = pos_;
    const int err = Open("ERROR");
    {
      Enter e(this, err);
      ParseStatements(/*until_dedent=*/true);
    }
    if (pos_ > first) {
      tree_.AddErrorSpan({toks_[first].span.begin, toks_[pos_ - 1].span.end});
    }
    if (IsKind(Kind::kDedent)) ++pos_;
  }

  // Runs `body`; on a parse error, discards its partial nodes and turns its
  // logical line into an ERROR region, then parses any indented block that
  // follows as ordinary statements.
  void Guarded(const std::function<void()>& body) {
    const size_t mark = tree_.size();
    const size_t start = pos_;
    const int saved = cur_;
    try {
      body();
      return;
    } catch (const ParseError&) {
    }
    tree_.Truncate(mark);
    cur_ = saved;
    pos_ = start;
    const int err = Open("ERROR");
    {
      Enter e(this, err);
      while (!AtLineEnd() && !IsKind(Kind::kIndent) && !IsKind(Kind::kDedent)) Leaf();
    }
    if (pos_ > start) {
      tree_.AddErrorSpan({toks_[start].span.begin, toks_[pos_ - 1].span.end});
    }
    if (IsKind(Kind::kNewline)) Leaf();
    if (IsKind(Kind::kIndent)) {
      ++pos_;
      const int block = Open("block");
      {
        Enter e(this, block);
        ParseStatements(/*until_dedent=*/true);
      }
      if (IsKind(Kind::kDedent)) ++pos_;
    }
  }

  void ParseStatement() {
    if (IsKw("if")) return IfStatement();
    if (IsKw("while")) return WhileStatement();
    if (IsKw("for")) return ForStatement();
    if (IsKw("try")) return TryStatement();
    if (IsKw("with")) return WithStatement();
    if (IsKw("def")) return FunctionDefinition();
    if (IsKw("class")) return ClassDefinition();
    if (IsOp("@")) return DecoratedDefinition();
    if (IsKw("async")) {
      if (IsKw("def", 1)) return FunctionDefinition();
      if (IsKw("for", 1)) return ForStatement();
      if (IsKw("with", 1)) return WithStatement();
      throw ParseError{};
    }
    SimpleStatements();
  }

  void SimpleStatements() {
    SmallStatement();
    while (IsOp(";")) {
      Leaf();
      if (AtLineEnd()) break;
      SmallStatement();
    }
    if (IsKind(Kind::kNewline)) {
      Leaf();
    } else if (!IsKind(Kind::kEnd)) {
      throw ParseError{};
    }
  }

  void KeywordOnly(const char* type) {
    Enter e(this, Open(type));
    Leaf();
  }

  void SmallStatement() {
    if (IsKw("pass")) return KeywordOnly("pass_statement");
    if (IsKw("break")) return KeywordOnly("break_statement");
    if (IsKw("continue")) return KeywordOnly("continue_statement");
    if (IsKw("return")) {
      Enter e(this, Open("return_statement"));
      Leaf();
      if (StartsExpression()) StarExpressions();
      return;
    }
    if (IsKw("raise")) {
      Enter e(this, Open("raise_statement"));
      Leaf();
      if (StartsExpression()) {
        Expression();
        if (IsKw("from")) {
          Leaf();
          Expression();
        }
      }
      return;
    }
    if (IsKw("global") || IsKw("nonlocal")) {
      Enter e(this, Open(IsKw("global") ? "global_statement" : "nonlocal_statement"));
      Leaf();
      ExpectName();
      while (IsOp(",")) {
        Leaf();
        ExpectName();
      }
      return;
    }
    if (IsKw("del")) {
      Enter e(this, Open("delete_statement"));
      Leaf();
      StarExpressions();
      return;
    }
    if (IsKw("assert")) {
      Enter e(this, Open("assert_statement"));
      Leaf();
      Expression();
      if (IsOp(",")) {
        Leaf();
        Expression();
      }
      return;
    }
    if (IsKw("import")) return ImportStatement();
    if (IsKw("from")) return ImportFromStatement();
    ExpressionStatement();
  }

  void DottedName() {
    ExpectName();
    while (IsOp(".")) {
      Leaf();
      ExpectName();
    }
  }

  void ImportStatement() {
    Enter e(this, Open("import_statement"));
    Leaf();
    for (;;) {
      {
        Enter item(this, Open("dotted_name"));
        DottedName();
      }
      if (IsKw("as")) {
        Leaf();
        ExpectName();
      }
      if (!IsOp(",")) break;
      Leaf();
    }
  }

  void ImportFromStatement() {
    Enter e(this, Open("import_from_statement"));
    Leaf();
    bool relative = false;
    while (IsOp(".") || IsOp("...")) {
      Leaf();
      relative = true;
    }
    if (!IsKw("import")) {
      Enter item(this, Open("dotted_name"));
      DottedName();
    } else if (!relative) {
      throw ParseError{};
    }
    ExpectKw("import");
    if (IsOp("*")) {
      Leaf();
      return;
    }
    const bool paren = IsOp("(");
    if (paren) Leaf();
    for (;;) {
      ExpectName();
      if (IsKw("as")) {
        Leaf();
        ExpectName();
      }
      if (!IsOp(",")) break;
      Leaf();
      if (paren && IsOp(")")) break;
    }
    if (paren) ExpectOp(")");
  }

  static bool IsAugmentedAssign(std::string_view op) {
    return op == "+=" || op == "-=" || op == "*=" || op == "/=" || op == "//=" ||
           op == "%=" || op == "@=" || op == "&=" || op == "|=" || op == "^=" ||
           op == ">>=" || op == "<<=" || op == "**=";
  }

  void RightHandSide() {
    if (IsKw("yield")) {
      Yield();
    } else {
      StarExpressions();
    }
  }

  void ExpressionStatement() {
    Enter e(this, Open("expression_statement"));
    if (IsKw("yield")) {
      Yield();
      return;
    }
    const int lhs = StarExpressions();
    if (IsOp(":")) {
      Enter a(this, tree_.Wrap(lhs, "assignment"));
      Leaf();
      Expression();
      if (IsOp("=")) {
        Leaf();
        RightHandSide();
      }
    } else if (At().kind == Kind::kOp && IsAugmentedAssign(At().text)) {
      Enter a(this, tree_.Wrap(lhs, "augmented_assignment"));
      Leaf();
      RightHandSide();
    } else if (IsOp("=")) {
      Enter a(this, tree_.Wrap(lhs, "assignment"));
      while (IsOp("=")) {
        Leaf();
        RightHandSide();
      }
    }
  }

  void Block() {
    Enter e(this, Open("block"));
    if (IsKind(Kind::kNewline)) {
      Leaf();
      if (IsKind(Kind::kIndent)) {
        ++pos_;
        ParseStatements(/*until_dedent=*/true);
        if (IsKind(Kind::kDedent)) ++pos_;
      } else if (!AtEndOfInput()) {
        throw ParseError{};
      }
    } else if (!IsKind(Kind::kEnd)) {
      SimpleStatements();
    }
  }

  void Clause(const char* type, bool with_condition) {
    Enter e(this, Open(type));
    Leaf();
    if (with_condition) NamedExpression();
    ExpectOp(":");
    Block();
  }

  void ElseClause() {
    Guarded([this] { Clause("else_clause", false); });
  }

  void IfStatement() {
    Enter e(this, Open("if_statement"));
    Leaf();
    NamedExpression();
    ExpectOp(":");
    Block();
    while (IsKw("elif")) Guarded([this] { Clause("elif_clause", true); });
    if (IsKw("else")) ElseClause();
  }

  void WhileStatement() {
    Enter e(this, Open("while_statement"));
    Leaf();
    NamedExpression();
    ExpectOp(":");
    Block();
    if (IsKw("else")) ElseClause();
  }

  void ForStatement() {
    Enter e(this, Open("for_statement"));
    if (IsKw("async")) Leaf();
    ExpectKw("for");
    TargetList();
    ExpectKw("in");
    StarExpressions();
    ExpectOp(":");
    Block();
    if (IsKw("else")) ElseClause();
  }

  void TryStatement() {
    Enter e(this, Open("try_statement"));
    Leaf();
    ExpectOp(":");
    Block();
    bool handled = false;
    while (IsKw("except")) {
      handled = true;
      Guarded([this] {
        Enter c(this, Open("except_clause"));
        Leaf();
        if (IsOp("*")) Leaf();
        if (!IsOp(":")) {
          Expression();
          if (IsKw("as")) {
            Leaf();
            ExpectName();
          }
        }
        ExpectOp(":");
        Block();
      });
    }
    if (IsKw("else")) ElseClause();
    if (IsKw("finally")) {
      handled = true;
      Guarded([this] { Clause("finally_clause", false); });
    }
    if (!handled && !IsKind(Kind::kEnd)) throw ParseError{};
  }

  void WithStatement() {
    Enter e(this, Open("with_statement"));
    if (IsKw("async")) Leaf();
    ExpectKw("with");
    for (;;) {
      {
        Enter item(this, Open("with_item"));
        Expression();
        if (IsKw("as")) {
          Leaf();
          StarTarget();
        }
      }
      if (!IsOp(",")) break;
      Leaf();
    }
    ExpectOp(":");
    Block();
  }

  void FunctionDefinition() {
    Enter e(this, Open("function_definition"));
    if (IsKw("async")) Leaf();
    ExpectKw("def");
    ExpectName();
    Parameters();
    if (IsOp("->")) {
      Leaf();
      Expression();
    }
    ExpectOp(":");
    Block();
  }

  void ClassDefinition() {
    Enter e(this, Open("class_definition"));
    Leaf();
    ExpectName();
    if (IsOp("(")) Arguments();
    ExpectOp(":");
    Block();
  }

  void DecoratedDefinition() {
    Enter e(this, Open("decorated_definition"));
    while (IsOp("@")) {
      {
        Enter d(this, Open("decorator"));
        Leaf();
        NamedExpression();
      }
      if (!IsKind(Kind::kNewline)) throw ParseError{};
      Leaf();
    }
    if (IsKw("def") || (IsKw("async") && IsKw("def", 1))) return FunctionDefinition();
    if (IsKw("class")) return ClassDefinition();
    throw ParseError{};
  }

  void Parameters() {
    Enter e(this, Open("parameters"));
    ExpectOp("(");
    while (!IsOp(")")) {
      Parameter(/*annotations=*/true);
      if (!IsOp(",")) break;
      Leaf();
    }
    ExpectOp(")");
  }

  void Parameter(bool annotations) {
    if (IsOp("/")) {
      Leaf();
      return;
    }
    if (IsOp("*") || IsOp("**")) {
      Enter e(this, Open(IsOp("*") ? "list_splat_pattern" : "dictionary_splat_pattern"));
      const bool single = IsOp("*");
      Leaf();
      if (single && !IsName()) return;
      ExpectName();
      if (annotations && IsOp(":")) {
        Leaf();
        Expression();
      }
      return;
    }
    int param = ExpectName();
    if (annotations && IsOp(":")) {
      param = tree_.Wrap(param, "typed_parameter");
      Enter e(this, param);
      Leaf();
      Expression();
    }
    if (IsOp("=")) {
      Enter e(this, tree_.Wrap(param, "default_parameter"));
      Leaf();
      Expression();
    }
  }

  // ---- expressions ---------------------------------------------------------

  int Yield() {
    const int node = Open("yield");
    Enter e(this, node);
    Leaf();
    if (IsKw("from")) {
      Leaf();
      Expression();
    } else if (StartsExpression()) {
      StarExpressions();
    }
    return node;
  }

  int StarExpression() {
    if (IsOp("*")) {
      const int node = Open("list_splat");
      Enter e(this, node);
      Leaf();
      BitOr();
      return node;
    }
    return Expression();
  }

  int StarExpressions() {
    const int first = StarExpression();
    if (!IsOp(",")) return first;
    const int list = tree_.Wrap(first, "expression_list");
    Enter e(this, list);
    while (IsOp(",")) {
      Leaf();
      if (!StartsExpression()) break;
      StarExpression();
    }
    return list;
  }

  int StarTarget() {
    if (IsOp("*")) {
      const int node = Open("list_splat_pattern");
      Enter e(this, node);
      Leaf();
      BitOr();
      return node;
    }
    return BitOr();
  }

  int TargetList() {
    const int first = StarTarget();
    if (!IsOp(",")) return first;
    const int list = tree_.Wrap(first, "pattern_list");
    Enter e(this, list);
    while (IsOp(",")) {
      Leaf();
      if (!StartsExpression()) break;
      StarTarget();
    }
    return list;
  }

  int NamedExpression() {
    if (IsName() && IsOp(":=", 1)) {
      const int node = Open("named_expression");
      Enter e(this, node);
      Leaf();
      Leaf();
      Expression();
      return node;
    }
    return Expression();
  }

  int StarOrNamed() {
    if (IsOp("*")) return StarExpression();
    return NamedExpression();
  }

  int Expression() {
    if (IsKw("lambda")) return Lambda();
    const int left = Disjunction();
    if (IsKw("if")) {
      const int node = tree_.Wrap(left, "conditional_expression");
      Enter e(this, node);
      Leaf();
      Disjunction();
      ExpectKw("else");
      Expression();
      return node;
    }
    return left;
  }

  int Lambda() {
    const int node = Open("lambda");
    Enter e(this, node);
    Leaf();
    if (!IsOp(":")) {
      Enter params(this, Open("lambda_parameters"));
      while (!IsOp(":")) {
        Parameter(/*annotations=*/false);
        if (!IsOp(",")) break;
        Leaf();
      }
    }
    ExpectOp(":");
    Expression();
    return node;
  }

  int Disjunction() {
    int left = Conjunction();
    while (IsKw("or")) {
      const int node = tree_.Wrap(left, "boolean_operator");
      Enter e(this, node);
      Leaf();
      Conjunction();
      left = node;
    }
    return left;
  }

  int Conjunction() {
    int left = Inversion();
    while (IsKw("and")) {
      const int node = tree_.Wrap(left, "boolean_operator");
      Enter e(this, node);
      Leaf();
      Inversion();
      left = node;
    }
    return left;
  }

  int Inversion() {
    if (IsKw("not")) {
      const int node = Open("not_operator");
      Enter e(this, node);
      Leaf();
      Inversion();
      return node;
    }
    return Comparison();
  }

  bool AtComparisonOperator() const {
    if (At().kind == Kind::kOp) {
      const auto t = At().text;
      return t == "<" || t == ">" || t == "==" || t == ">=" || t == "<=" || t == "!=";
    }
    return IsKw("in") || IsKw("is") || (IsKw("not") && IsKw("in", 1));
  }

  int Comparison() {
    int left = BitOr();
    while (AtComparisonOperator()) {
      const int node = tree_.Wrap(left, "comparison_operator");
      Enter e(this, node);
      if (IsKw("not") || IsKw("is")) {
        const bool is = IsKw("is");
        Leaf();
        if (is && IsKw("not")) Leaf();
        if (!is) ExpectKw("in");
      } else {
        Leaf();
      }
      BitOr();
      left = node;
    }
    return left;
  }

  int Binary(const std::function<int()>& operand,
             std::initializer_list<std::string_view> ops) {
    int left = operand();
    for (;;) {
      bool match = false;
      for (std::string_view op : ops) match = match || IsOp(op);
      if (!match) return left;
      const int node = tree_.Wrap(left, "binary_operator");
      Enter e(this, node);
      Leaf();
      operand();
      left = node;
    }
  }

  int BitOr() { return Binary([this] { return BitXor(); }, {"|"}); }
  int BitXor() { return Binary([this] { return BitAnd(); }, {"^"}); }
  int BitAnd() { return Binary([this] { return Shift(); }, {"&"}); }
  int Shift() { return Binary([this] { return Sum(); }, {"<<", ">>"}); }
  int Sum() { return Binary([this] { return Term(); }, {"+", "-"}); }
  int Term() {
    return Binary([this] { return Factor(); }, {"*", "/", "//", "%", "@"});
  }

  int Factor() {
    if (IsOp("+") || IsOp("-") || IsOp("~")) {
      const int node = Open("unary_operator");
      Enter e(this, node);
      Leaf();
      Factor();
      return node;
    }
    return Power();
  }

  int Power() {
    const int left = AwaitPrimary();
    if (IsOp("**")) {
      const int node = tree_.Wrap(left, "binary_operator");
      Enter e(this, node);
      Leaf();
      Factor();
      return node;
    }
    return left;
  }

  int AwaitPrimary() {
    if (IsKw("await")) {
      const int node = Open("await");
      Enter e(this, node);
      Leaf();
      Primary();
      return node;
    }
    return Primary();
  }

  int Primary() {
    int left = Atom();
    for (;;) {
      if (IsOp(".")) {
        const int node = tree_.Wrap(left, "attribute");
        Enter e(this, node);
        Leaf();
        ExpectName();
        left = node;
      } else if (IsOp("(")) {
        const int node = tree_.Wrap(left, "call");
        Enter e(this, node);
        Arguments();
        left = node;
      } else if (IsOp("[")) {
        const int node = tree_.Wrap(left, "subscript");
        Enter e(this, node);
        Leaf();
        Slices();
        ExpectOp("]");
        left = node;
      } else {
        return left;
      }
    }
  }

  int Atom() {
    const Token& t = At();
    switch (t.kind) {
      case Kind::kName:
        if (IsName() || IsKw("True") || IsKw("False") || IsKw("None")) return Leaf();
        throw ParseError{};
      case Kind::kNumber:
        return Leaf();
      case Kind::kString: {
        if (!IsKind(Kind::kString, 1)) return Leaf();
        const int node = Open("concatenated_string");
        Enter e(this, node);
        while (IsKind(Kind::kString)) Leaf();
        return node;
      }
      case Kind::kOp:
        if (t.text == "...") return Leaf();
        if (t.text == "(") return Parenthesized();
        if (t.text == "[") return ListDisplay();
        if (t.text == "{") return DictOrSet();
        throw ParseError{};
      default:
        throw ParseError{};
    }
  }

  bool AtComprehension() const {
    return IsKw("for") || (IsKw("async") && IsKw("for", 1));
  }

  void ComprehensionClauses() {
    while (AtComprehension()) {
      {
        Enter e(this, Open("for_in_clause"));
        if (IsKw("async")) Leaf();
        Leaf();
        TargetList();
        ExpectKw("in");
        Disjunction();
      }
      while (IsKw("if")) {
        Enter e(this, Open("if_clause"));
        Leaf();
        Disjunction();
      }
    }
  }

  int Parenthesized() {
    const int node = Open("parenthesized_expression");
    Enter e(this, node);
    Leaf();
    if (IsOp(")")) {
      Rename(node, "tuple");
      Leaf();
      return node;
    }
    if (IsKw("yield")) {
      Yield();
      ExpectOp(")");
      return node;
    }
    StarOrNamed();
    if (AtComprehension()) {
      Rename(node, "generator_expression");
      ComprehensionClauses();
    } else if (IsOp(",")) {
      Rename(node, "tuple");
      while (IsOp(",")) {
        Leaf();
        if (IsOp(")")) break;
        StarOrNamed();
      }
    }
    ExpectOp(")");
    return node;
  }

  int ListDisplay() {
    const int node = Open("list");
    Enter e(this, node);
    Leaf();
    if (!IsOp("]")) {
      StarOrNamed();
      if (AtComprehension()) {
        Rename(node, "list_comprehension");
        ComprehensionClauses();
      } else {
        while (IsOp(",")) {
          Leaf();
          if (IsOp("]")) break;
          StarOrNamed();
        }
      }
    }
    ExpectOp("]");
    return node;
  }

  // One dictionary entry; returns false for a set element.
  bool DictItem() {
    if (IsOp("**")) {
      Enter e(this, Open("dictionary_splat"));
      Leaf();
      BitOr();
      return true;
    }
    const int key = StarOrNamed();
    if (!IsOp(":")) return false;
    Enter e(this, tree_.Wrap(key, "pair"));
    Leaf();
    Expression();
    return true;
  }

  int DictOrSet() {
    const int node = Open("dictionary");
    Enter e(this, node);
    Leaf();
    if (!IsOp("}")) {
      const bool dict = DictItem();
      if (!dict) Rename(node, "set");
      if (AtComprehension()) {
        Rename(node, dict ? "dictionary_comprehension" : "set_comprehension");
        ComprehensionClauses();
      } else {
        while (IsOp(",")) {
          Leaf();
          if (IsOp("}")) break;
          if (DictItem() != dict) throw ParseError{};
        }
      }
    }
    ExpectOp("}");
    return node;
  }

  void Arguments() {
    Enter e(this, Open("argument_list"));
    ExpectOp("(");
    while (!IsOp(")")) {
      if (IsOp("*") || IsOp("**")) {
        Enter s(this, Open(IsOp("*") ? "list_splat" : "dictionary_splat"));
        Leaf();
        Expression();
      } else if (IsName() && IsOp("=", 1)) {
        Enter k(this, Open("keyword_argument"));
        Leaf();
        Leaf();
        Expression();
      } else {
        const int arg = NamedExpression();
        if (AtComprehension()) {
          Enter g(this, tree_.Wrap(arg, "generator_expression"));
          ComprehensionClauses();
        }
      }
      if (!IsOp(",")) break;
      Leaf();
    }
    ExpectOp(")");
  }

  void SliceRest() {
    Leaf();  // ':'
    if (!IsOp(":") && !IsOp(",") && !IsOp("]")) Expression();
    if (IsOp(":")) {
      Leaf();
      if (!IsOp(",") && !IsOp("]")) Expression();
    }
  }

  void Slices() {
    for (;;) {
      if (IsOp(":")) {
        Enter s(this, Open("slice"));
        SliceRest();
      } else {
        const int item = StarOrNamed();
        if (IsOp(":")) {
          Enter s(this, tree_.Wrap(item, "slice"));
          SliceRest();
        }
      }
      if (!IsOp(",")) return;
      Leaf();
      if (IsOp("]")) return;
    }
  }

  std::string_view text_;
  const std::vector<Token>& toks_;
  SyntaxTree& tree_;
  size_t pos_ = 0;
  int cur_ = 0;
};

}  // namespace

SyntaxTree ParsePython(std::string_view text) {
  const python::LexResult lex = python::Lex(text);
  SyntaxTree tree("module", text.size());
  Parser(text, lex, tree).ParseModule();
  for (const python::Trivia& trivia : lex.trivia) {
    tree.AddLeaf(trivia.type, trivia.span, 0);
  }
  for (const ByteSpan& comment : lex.comments) {
    const int node = tree.AddNode("comment", 0);
    tree.AddLeaf("comment_marker", {comment.begin, comment.begin + 1}, node);
    AddNaturalLanguagePieces(tree, text, {comment.begin + 1, comment.end}, node,
                             "comment_punct");
  }
  for (const ByteSpan& error : lex.errors) tree.AddErrorSpan(error);
  tree.Finalize();
  return tree;
}

}  // namespace ratex::concepts

namespace ratex::concepts {

std::vector<size_t> PythonLogicalLineStarts(std::string_view text) {
  const python::LexResult lex = python::Lex(text);
  std::vector<size_t> starts;
  bool at_start = true;
  for (const python::Token& tok : lex.tokens) {
    if (tok.kind == python::Kind::kIndent || tok.kind == python::Kind::kDedent) continue;
    if (tok.kind == python::Kind::kNewline || tok.kind == python::Kind::kEnd) {
      at_start = true;
      continue;
    }
    if (at_start) {
      const size_t nl = text.rfind('\n', tok.span.begin == 0 ? 0 : tok.span.begin - 1);
      starts.push_back(tok.span.begin == 0 || nl == std::string_view::npos ? 0 : nl + 1);
      at_start = false;
    }
  }
  return starts;
}

}  // namespace ratex::concepts
