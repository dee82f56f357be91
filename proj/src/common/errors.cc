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

#include "ratex/common/errors.h"

namespace ratex {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kUnknownToken: return "UnknownToken";
    case ErrorCode::kEmptyVocabulary: return "EmptyVocabulary";
    case ErrorCode::kEmptyCorpus: return "EmptyCorpus";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kTargetOutOfRange: return "TargetOutOfRange";
    case ErrorCode::kContextTooLarge: return "ContextTooLarge";
    case ErrorCode::kBackendError: return "BackendError";
    case ErrorCode::kUnsupportedLanguage: return "UnsupportedLanguage";
    case ErrorCode::kFocalMethodNotFound: return "FocalMethodNotFound";
    case ErrorCode::kInconsistentSnippet: return "InconsistentSnippet";
    case ErrorCode::kMissingLabel: return "MissingLabel";
    case ErrorCode::kTaxonomyMismatch: return "TaxonomyMismatch";
    case ErrorCode::kEmptyInput: return "EmptyInput";
    case ErrorCode::kDuplicateTrial: return "DuplicateTrial";
    case ErrorCode::kMissingDocstring: return "MissingDocstring";
    case ErrorCode::kMissingSignature: return "MissingSignature";
    case ErrorCode::kBodyTooShort: return "BodyTooShort";
    case ErrorCode::kInsufficientCorpus: return "InsufficientCorpus";
    case ErrorCode::kNoRationale: return "NoRationale";
    case ErrorCode::kPositionOutOfRange: return "PositionOutOfRange";
    case ErrorCode::kSchemaMismatch: return "SchemaMismatch";
    case ErrorCode::kIoError: return "IoError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
      code_(code) {}

void Fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace ratex
