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

#include "ratex/tensor/interpretability_matrix.h"

#include <string>

#include "ratex/common/errors.h"

namespace ratex::tensor {

InterpretabilityMatrix InterpretabilityMatrix::Build(
    size_t size, std::span<const rationale::RationaleResult> results) {
  InterpretabilityMatrix phi(size);
  for (const rationale::RationaleResult& result : results) {
    const size_t tgt = result.target_position;
    if (tgt >= size) {
      Fail(ErrorCode::kInconsistentSnippet,
           "target " + std::to_string(tgt) + " outside snippet of size " + std::to_string(size));
    }
    if (!phi.targets_.insert(tgt).second) {
      Fail(ErrorCode::kInconsistentSnippet, "target " + std::to_string(tgt) + " repeated");
    }
    std::vector<size_t>& order = phi.order_[tgt];
    for (const rationale::RationaleStep& step : result.steps) {
      if (step.added_position >= tgt) {
        Fail(ErrorCode::kInconsistentSnippet,
             "rationale position " + std::to_string(step.added_position) +
                 " is not before target " + std::to_string(tgt));
      }
      if (!phi.cells_.emplace(std::pair{tgt, step.added_position}, step.probability_of_target)
               .second) {
        Fail(ErrorCode::kInconsistentSnippet, "repeated rationale position for target " +
                                                  std::to_string(tgt));
      }
      order.push_back(step.added_position);
    }
  }
  return phi;
}

std::vector<PhiCell> InterpretabilityMatrix::Cells() const {
  std::vector<PhiCell> out;
  out.reserve(cells_.size());
  for (const auto& [key, p] : cells_) out.push_back({key.second, key.first, p});
  return out;
}

std::optional<double> InterpretabilityMatrix::Get(size_t src, size_t tgt) const {
  auto it = cells_.find({tgt, src});
  if (it == cells_.end()) return std::nullopt;
  return it->second;
}

const std::vector<size_t>& InterpretabilityMatrix::RationaleOf(size_t tgt) const {
  static const std::vector<size_t> kEmpty;
  auto it = order_.find(tgt);
  return it == order_.end() ? kEmpty : it->second;
}

Json InterpretabilityMatrix::ToJson() const {
  Json doc = {{"size", size_}, {"targets", targets_}};
  Json cells = Json::array();
  for (const auto& [tgt, order] : order_) {
    for (size_t step = 0; step < order.size(); ++step) {
      cells.push_back({{"src", order[step]},
                       {"tgt", tgt},
                       {"p", cells_.at({tgt, order[step]})},
                       {"step", step}});
    }
  }
  doc["cells"] = cells;
  return doc;
}

InterpretabilityMatrix InterpretabilityMatrix::FromJson(const Json& doc) {
  const size_t size = doc.at("size").get<size_t>();
  std::map<size_t, rationale::RationaleResult> by_target;
  for (const Json& t : doc.at("targets")) {
    by_target[t.get<size_t>()].target_position = t.get<size_t>();
  }
  for (const Json& cell : doc.at("cells")) {
    const size_t tgt = cell.at("tgt").get<size_t>();
    auto it = by_target.find(tgt);
    if (it == by_target.end()) {
      Fail(ErrorCode::kInconsistentSnippet, "cell for undeclared target " + std::to_string(tgt));
    }
    it->second.steps.push_back({cell.at("src").get<size_t>(), cell.at("p").get<double>(), 1});
  }
  std::vector<rationale::RationaleResult> results;
  for (auto& [tgt, result] : by_target) results.push_back(std::move(result));
  return Build(size, results);
}

}  // namespace ratex::tensor
