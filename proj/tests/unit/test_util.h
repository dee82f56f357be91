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

#ifndef RATEX_TESTS_UNIT_TEST_UTIL_H_
#define RATEX_TESTS_UNIT_TEST_UTIL_H_

#include <stdlib.h>

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "ratex/common/errors.h"

namespace ratex::testing {

// Fresh directory under the system temp dir, removed on destruction.
class ScratchDir {
 public:
  ScratchDir() {
    std::string pattern = (std::filesystem::temp_directory_path() / "ratex-XXXXXX").string();
    if (!mkdtemp(pattern.data())) Fail(ErrorCode::kIoError, "mkdtemp failed");
    path_ = pattern;
  }
  ~ScratchDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  ScratchDir(const ScratchDir&) = delete;
  ScratchDir& operator=(const ScratchDir&) = delete;

  const std::filesystem::path& path() const { return path_; }
  std::filesystem::path operator/(const std::string& child) const { return path_ / child; }

 private:
  std::filesystem::path path_;
};

inline std::filesystem::path Fixture(const std::string& relative) {
  return std::filesystem::path(RATEX_FIXTURE_DIR) / relative;
}

inline std::filesystem::path Golden(const std::string& relative) {
  return std::filesystem::path(RATEX_GOLDEN_DIR) / relative;
}

// The ErrorCode thrown by `f`, or nullopt when it returns normally.
template <typename F>
std::optional<ErrorCode> ErrorOf(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

}  // namespace ratex::testing

#endif  // RATEX_TESTS_UNIT_TEST_UTIL_H_
