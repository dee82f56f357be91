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

#ifndef RATEX_TENSOR_INTERPRETABILITY_TENSOR_H_
#define RATEX_TENSOR_INTERPRETABILITY_TENSOR_H_

#include <span>

#include "ratex/tensor/aggregation.h"
#include "ratex/tensor/concept_matrix.h"

namespace ratex::tensor {

using InterpretabilityTensor = ConceptGrid;

inline constexpr std::string_view kTensorKind = "interpretability_tensor";

// Pools each concept pair's observations across `matrices` (sorted
// ascending) and applies g. Pairs absent from every matrix stay absent.
// meta: {"g", "snippet_count"}.
//
// Throws kEmptyInput for an empty list and kTaxonomyMismatch when the
// matrices come from different taxonomies.
InterpretabilityTensor Reduce(std::span<const ConceptMatrix> matrices, Aggregation g);

// Per-cell `statistic` over the trial values of each cell, over the union of
// cells. Raw lists are pooled across trials. Each tensor's meta must carry
// an integer "trial"; meta of the result: {"g", "trials", "snippet_count"}.
//
// Throws kEmptyInput, kTaxonomyMismatch, or kDuplicateTrial.
InterpretabilityTensor MergeTrials(std::span<const InterpretabilityTensor> tensors,
                                   Aggregation statistic);

}  // namespace ratex::tensor

#endif  // RATEX_TENSOR_INTERPRETABILITY_TENSOR_H_
