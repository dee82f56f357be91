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

#ifndef RATEX_CONCEPTS_JAVA_PARSER_H_
#define RATEX_CONCEPTS_JAVA_PARSER_H_

#include <string_view>

#include "ratex/concepts/syntax_tree.h"

namespace ratex::concepts {

// Member-level parser for Java compilation units. Produces package/import
// declarations, type declarations (class, interface, enum, record) with
// field_declaration, constructor_declaration, method_declaration and
// initializer children; statement bodies are kept as token leaves grouped
// into nested "block" nodes. Leaf types use tree-sitter-java names
// (identifier, decimal_integer_literal, string_literal pieces, keyword
// text, operator text, line_comment/block_comment internals).
//
// Unbalanced braces and unterminated literals or comments produce ERROR
// regions.
SyntaxTree ParseJava(std::string_view text);

}  // namespace ratex::concepts

#endif  // RATEX_CONCEPTS_JAVA_PARSER_H_
