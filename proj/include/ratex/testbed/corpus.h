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

#ifndef RATEX_TESTBED_CORPUS_H_
#define RATEX_TESTBED_CORPUS_H_

#include <filesystem>
#include <span>
#include <string>
#include <vector>

namespace ratex::testbed {

struct CorpusEntry {
  std::string id;
  std::string language;
  std::string source;
  friend bool operator==(const CorpusEntry&, const CorpusEntry&) = default;
};

// Reads JSON lines {"id","language","source"}, or every *.py / *.java file
// below a directory (ids are relative paths, sorted). Throws kEmptyCorpus
// when nothing is found.
std::vector<CorpusEntry> ReadCorpus(const std::filesystem::path& path);
void WriteCorpus(const std::filesystem::path& path, std::span<const CorpusEntry> entries);

}  // namespace ratex::testbed

#endif  // RATEX_TESTBED_CORPUS_H_
