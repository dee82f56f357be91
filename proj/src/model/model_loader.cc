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

#include "ratex/model/model_loader.h"

#include <cstdlib>

#include "ratex/common/errors.h"
#include "ratex/common/json_io.h"
#include "ratex/model/lookup_model.h"
#include "ratex/model/ngram_model.h"
#include "ratex/model/remote_model.h"

namespace ratex::model {

std::unique_ptr<LanguageModel> LoadModel(const std::string& spec) {
  if (spec == "remote") {
    const char* command = std::getenv(kRemoteBackendEnv);
    if (command == nullptr || *command == '\0') {
      Fail(ErrorCode::kInvalidArgument,
           std::string(kRemoteBackendEnv) + " is not set");
    }
    return RemoteModel::Launch(command);
  }
  if (spec.rfind("remote:", 0) == 0) return RemoteModel::Launch(spec.substr(7));

  const Json doc = ReadJsonFile(spec);
  const std::string kind = doc.value("kind", std::string());
  if (kind == "masked_ngram") {
    return std::make_unique<MaskedNgramModel>(MaskedNgramModel::FromJson(doc));
  }
  if (kind == "lookup_model") {
    return std::make_unique<LookupModel>(LookupModel::FromJson(doc));
  }
  Fail(ErrorCode::kSchemaMismatch,
       spec + ": unknown model kind \"" + kind + "\"");
}

}  // namespace ratex::model
