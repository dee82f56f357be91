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

#ifndef RATEX_MODEL_MODEL_LOADER_H_
#define RATEX_MODEL_MODEL_LOADER_H_

#include <memory>
#include <string>

#include "ratex/model/language_model.h"

namespace ratex::model {

// `spec` is a model file path (lookup or masked n-gram JSON), "remote:<cmd>"
// to launch a bridge, or "remote" to launch the command named by the
// RATEX_REMOTE_BACKEND environment variable.
std::unique_ptr<LanguageModel> LoadModel(const std::string& spec);

}  // namespace ratex::model

#endif  // RATEX_MODEL_MODEL_LOADER_H_
