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

#include "ratex/common/json_io.h"

#include <fstream>
#include <sstream>

#include "ratex/common/errors.h"

namespace ratex {

std::string ReadTextFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) Fail(ErrorCode::kIoError, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void WriteTextFile(const std::filesystem::path& path, std::string_view text) {
  if (path.has_parent_path()) {
    std::filesystem::create_directories(path.parent_path());
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) Fail(ErrorCode::kIoError, "cannot write " + path.string());
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) Fail(ErrorCode::kIoError, "short write to " + path.string());
}

Json ReadJsonFile(const std::filesystem::path& path) {
  const std::string text = ReadTextFile(path);
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    Fail(ErrorCode::kIoError, path.string() + ": " + e.what());
  }
}

void WriteJsonFile(const std::filesystem::path& path, const Json& doc) {
  WriteTextFile(path, doc.dump(2) + "\n");
}

Json MakeDocument(std::string_view kind) {
  Json doc = Json::object();
  doc["schema"] = kSchemaVersion;
  doc["kind"] = std::string(kind);
  return doc;
}

void CheckDocument(const Json& doc, std::string_view kind) {
  if (!doc.is_object() || !doc.contains("schema") ||
      !doc["schema"].is_number_integer()) {
    Fail(ErrorCode::kSchemaMismatch,
         "document has no integer \"schema\" field (expected " +
             std::string(kind) + ")");
  }
  const int version = doc["schema"].get<int>();
  if (version != kSchemaVersion) {
    Fail(ErrorCode::kSchemaMismatch,
         "unsupported schema version " + std::to_string(version) +
             " (this build reads version " + std::to_string(kSchemaVersion) +
             ")");
  }
  const std::string found = doc.value("kind", std::string());
  if (found != kind) {
    Fail(ErrorCode::kSchemaMismatch, "expected a \"" + std::string(kind) +
                                         "\" document, found \"" + found +
                                         "\"");
  }
}

}  // namespace ratex
