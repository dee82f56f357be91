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

#include "ratex/testbed/corpus.h"

#include <algorithm>
#include <fstream>

#include "ratex/common/errors.h"
#include "ratex/common/json_io.h"

namespace ratex::testbed {

std::vector<CorpusEntry> ReadCorpus(const std::filesystem::path& path) {
  std::vector<CorpusEntry> entries;
  if (std::filesystem::is_directory(path)) {
    std::vector<std::filesystem::path> files;
    for (const auto& item : std::filesystem::recursive_directory_iterator(path)) {
      const auto ext = item.path().extension();
      if (item.is_regular_file() && (ext == ".py" || ext == ".java")) files.push_back(item.path());
    }
    std::sort(files.begin(), files.end());
    for (const auto& file : files) {
      entries.push_back({std::filesystem::relative(file, path).generic_string(),
                         file.extension() == ".py" ? "python" : "java", ReadTextFile(file)});
    }
  } else {
    std::ifstream in(path);
    if (!in) Fail(ErrorCode::kIoError, "cannot open corpus " + path.string());
    std::string line;
    size_t line_number = 0;
    while (std::getline(in, line)) {
      ++line_number;
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      Json doc;
      try {
        doc = Json::parse(line);
        entries.push_back({doc.at("id").get<std::string>(), doc.at("language").get<std::string>(),
                           doc.at("source").get<std::string>()});
      } catch (const Json::exception& e) {
        Fail(ErrorCode::kInvalidArgument,
             path.string() + ":" + std::to_string(line_number) + ": " + e.what());
      }
    }
  }
  if (entries.empty()) Fail(ErrorCode::kEmptyCorpus, "corpus " + path.string() + " is empty");
  return entries;
}

void WriteCorpus(const std::filesystem::path& path, std::span<const CorpusEntry> entries) {
  std::string text;
  for (const CorpusEntry& e : entries) {
    text += Json{{"id", e.id}, {"language", e.language}, {"source", e.source}}.dump();
    text += '\n';
  }
  WriteTextFile(path, text);
}

}  // namespace ratex::testbed
