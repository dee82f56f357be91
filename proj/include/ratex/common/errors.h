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

#ifndef RATEX_COMMON_ERRORS_H_
#define RATEX_COMMON_ERRORS_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace ratex {

enum class ErrorCode {
  kUnknownToken,
  kEmptyVocabulary,
  kEmptyCorpus,
  kInvalidArgument,
  kTargetOutOfRange,
  kContextTooLarge,
  kBackendError,
  kUnsupportedLanguage,
  kFocalMethodNotFound,
  kInconsistentSnippet,
  kMissingLabel,
  kTaxonomyMismatch,
  kEmptyInput,
  kDuplicateTrial,
  kMissingDocstring,
  kMissingSignature,
  kBodyTooShort,
  kInsufficientCorpus,
  kNoRationale,
  kPositionOutOfRange,
  kSchemaMismatch,
  kIoError,
};

std::string_view ErrorCodeName(ErrorCode code);

// All toolkit failures surface as this exception; `code()` identifies the
// contract violation so callers can branch without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void Fail(ErrorCode code, const std::string& message);

}  // namespace ratex

#endif  // RATEX_COMMON_ERRORS_H_
