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

#include "ratex/rationale/rationale_io.h"

namespace ratex::rationale {

Json ToJson(const RationaleResult& result) {
  Json steps = Json::array();
  for (const RationaleStep& step : result.steps) {
    steps.push_back({{"pos", step.added_position},
                     {"p", step.probability_of_target},
                     {"rank", step.rank_of_target}});
  }
  return Json{{"target_pos", result.target_position},
              {"target_token", result.target_token.value},
              {"covered", result.covered},
              {"steps", std::move(steps)},
              {"evals", result.evaluations_used}};
}

RationaleResult RationaleFromJson(const Json& doc) {
  RationaleResult out;
  out.target_position = doc.at("target_pos").get<size_t>();
  out.target_token = VocabId{doc.at("target_token").get<uint32_t>()};
  out.covered = doc.at("covered").get<bool>();
  out.evaluations_used = doc.at("evals").get<uint64_t>();
  for (const Json& step : doc.at("steps")) {
    out.steps.push_back({step.at("pos").get<size_t>(),
                         step.at("p").get<double>(),
                         step.at("rank").get<size_t>()});
  }
  return out;
}

Json ToJson(const std::vector<RationaleResult>& results) {
  Json out = Json::array();
  for (const auto& r : results) out.push_back(ToJson(r));
  return out;
}

std::vector<RationaleResult> RationalesFromJson(const Json& array) {
  std::vector<RationaleResult> out;
  for (const Json& item : array) out.push_back(RationaleFromJson(item));
  return out;
}

}  // namespace ratex::rationale
