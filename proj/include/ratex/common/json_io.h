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

#ifndef RATEX_COMMON_JSON_IO_H_
#define RATEX_COMMON_JSON_IO_H_

#include <filesystem>
#include <string>
#include <string_view>

#include "json.hpp"

namespace ratex {

using Json = nlohmann::json;

// Every on-disk artifact carries {"schema": kSchemaVersion, "kind": ...}.
inline constexpr int kSchemaVersion = 1;

Json ReadJsonFile(const std::filesystem::path& path);

// Serialized with two-space indentation and a trailing newline, so equal
// documents produce byte-identical files.
void WriteJsonFile(const std::filesystem::path& path, const Json& doc);

void WriteTextFile(const std::filesystem::path& path, std::string_view text);
std::string ReadTextFile(const std::filesystem::path& path);

Json MakeDocument(std::string_view kind);

// Throws kSchemaMismatch when `doc` is not a `kind` document of the current
// schema version.
void CheckDocument(const Json& doc, std::string_view kind);

}  // namespace ratex

#endif  // RATEX_COMMON_JSON_IO_H_
