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

#ifndef RATEX_CONCEPTS_CONTEXT_LEVELS_H_
#define RATEX_CONCEPTS_CONTEXT_LEVELS_H_

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ratex/concepts/concept_mapper.h"
#include "ratex/concepts/taxonomy.h"

namespace ratex::concepts {

// Scope categories of a Java file, used as concepts for test generation.
inline constexpr std::string_view kLevelImports = "imports";
inline constexpr std::string_view kLevelClassDeclaration = "class_declaration";
inline constexpr std::string_view kLevelClassFields = "class_fields";
inline constexpr std::string_view kLevelConstructor = "constructor";
inline constexpr std::string_view kLevelFocalMethod = "focal_method";
inline constexpr std::string_view kLevelOtherMethod = "other_method";
inline constexpr std::string_view kLevelComment = "comment";

// Context level of each token span: comments first, then the innermost
// member (method, constructor, field or initializer), then the enclosing
// type declaration; everything outside a type is "imports". Every overload
// named `focal_method` counts as the focal method.
//
// Throws kFocalMethodNotFound when no method has that name.
std::vector<std::string> ContextLevels(std::string_view java_text,
                                       std::span<const ByteSpan> tokens,
                                       std::string_view focal_method);

// Labels tokens through the taxonomy's level map.
std::vector<LabeledToken> LabelContextLevels(std::string_view java_text,
                                             std::span<const ByteSpan> tokens,
                                             std::string_view focal_method,
                                             const Taxonomy& taxonomy);

}  // namespace ratex::concepts

#endif  // RATEX_CONCEPTS_CONTEXT_LEVELS_H_
