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

#ifndef RATEX_RATIONALE_RATIONALE_IO_H_
#define RATEX_RATIONALE_RATIONALE_IO_H_

#include <vector>

#include "ratex/common/json_io.h"
#include "ratex/rationale/rationalizer.h"

namespace ratex::rationale {

// {"target_pos", "target_token", "covered", "steps": [{"pos","p","rank"}],
//  "evals"}
Json ToJson(const RationaleResult& result);
RationaleResult RationaleFromJson(const Json& doc);

Json ToJson(const std::vector<RationaleResult>& results);
std::vector<RationaleResult> RationalesFromJson(const Json& array);

}  // namespace ratex::rationale

#endif  // RATEX_RATIONALE_RATIONALE_IO_H_
