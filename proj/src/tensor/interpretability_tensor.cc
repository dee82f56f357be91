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

#include "ratex/tensor/interpretability_tensor.h"

#include <algorithm>
#include <map>
#include <set>

#include "ratex/common/errors.h"

namespace ratex::tensor {
namespace {

template <typename Grid>
void CheckTaxonomies(std::span<const Grid> grids) {
  if (grids.empty()) Fail(ErrorCode::kEmptyInput, "nothing to reduce");
  for (const Grid& grid : grids) {
    if (grid.taxonomy_id != grids.front().taxonomy_id) {
      Fail(ErrorCode::kTaxonomyMismatch, "taxonomy '" + grid.taxonomy_id + "' differs from '" +
                                             grids.front().taxonomy_id + "'");
    }
  }
}

}  // namespace

InterpretabilityTensor Reduce(std::span<const ConceptMatrix> matrices, Aggregation g) {
  CheckTaxonomies(matrices);
  InterpretabilityTensor tensor;
  tensor.taxonomy_id = matrices.front().taxonomy_id;
  for (const ConceptMatrix& matrix : matrices) {
    for (const auto& [key, cell] : matrix.cells) {
      std::vector<double>& raw = tensor.cells[key].raw;
      raw.insert(raw.end(), cell.raw.begin(), cell.raw.end());
    }
  }
  for (auto& [key, cell] : tensor.cells) {
    std::sort(cell.raw.begin(), cell.raw.end());
    cell.value = Aggregate(g, cell.raw);
  }
  tensor.meta = {{"g", AggregationName(g)}, {"snippet_count", matrices.size()}};
  return tensor;
}

InterpretabilityTensor MergeTrials(std::span<const InterpretabilityTensor> tensors,
                                   Aggregation statistic) {
  CheckTaxonomies(tensors);
  std::set<int64_t> trials;
  size_t snippets = 0;
  for (const InterpretabilityTensor& t : tensors) {
    if (!t.meta.contains("trial") || !t.meta["trial"].is_number_integer()) {
      Fail(ErrorCode::kInvalidArgument, "tensor meta lacks an integer trial id");
    }
    if (!trials.insert(t.meta["trial"].get<int64_t>()).second) {
      Fail(ErrorCode::kDuplicateTrial,
           "trial " + std::to_string(t.meta["trial"].get<int64_t>()) + " appears twice");
    }
    snippets += t.meta.value("snippet_count", size_t{0});
  }
  std::map<ConceptPair, std::vector<double>> trial_values;
  InterpretabilityTensor merged;
  merged.taxonomy_id = tensors.front().taxonomy_id;
  for (const InterpretabilityTensor& t : tensors) {
    for (const auto& [key, cell] : t.cells) {
      trial_values[key].push_back(cell.value);
      std::vector<double>& raw = merged.cells[key].raw;
      raw.insert(raw.end(), cell.raw.begin(), cell.raw.end());
    }
  }
  for (auto& [key, cell] : merged.cells) {
    std::sort(cell.raw.begin(), cell.raw.end());
    cell.value = Aggregate(statistic, trial_values.at(key));
  }
  merged.meta = {{"g", AggregationName(statistic)},
                 {"trials", trials},
                 {"snippet_count", snippets}};
  return merged;
}

}  // namespace ratex::tensor
