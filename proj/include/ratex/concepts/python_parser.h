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

#ifndef RATEX_CONCEPTS_PYTHON_PARSER_H_
#define RATEX_CONCEPTS_PYTHON_PARSER_H_

#include <string_view>
#include <vector>

#include "ratex/concepts/syntax_tree.h"

namespace ratex::concepts {

// Parses Python 3 source into a concrete syntax tree whose node types follow
// tree-sitter-python naming (function_definition, if_statement, call, ...).
// Leaves are typed by keyword or operator text, "identifier", "integer",
// "float", "true", "false", "none", or trivia/string/comment piece types.
//
// A statement (or clause header) that fails to parse becomes an ERROR node
// covering its logical line; parsing resumes at the next line, and an
// indented block following a broken header is still parsed. An empty block
// at end of input is accepted, since prompts routinely stop after a header.
SyntaxTree ParsePython(std::string_view text);

// Offset of the physical line on which each logical line begins, in order.
// Comment-only and blank lines do not start logical lines.
std::vector<size_t> PythonLogicalLineStarts(std::string_view text);

}  // namespace ratex::concepts

#endif  // RATEX_CONCEPTS_PYTHON_PARSER_H_
