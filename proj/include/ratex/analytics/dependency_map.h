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

#ifndef RATEX_ANALYTICS_DEPENDENCY_MAP_H_
#define RATEX_ANALYTICS_DEPENDENCY_MAP_H_

#include <span>
#include <string>
#include <vector>

#include "ratex/common/json_io.h"
#include "ratex/concepts/concept_mapper.h"
#include "ratex/tensor/interpretability_matrix.h"

namespace ratex::analytics {

// A token annotated at all three levels: L1 the token itself, L2 its
// concept, L3 its modality ("code" or "natural_language").
struct DependencyNode {
  size_t position = 0;
  std::string text;
  std::string concept_name;
  std::string modality;
  // Rationale nodes only: the phi cell and the step that added the token.
  double weight = 0.0;
  size_t step = 0;
};

struct DependencyMap {
  DependencyNode target;
  // In the order the rationale grew.
  std::vector<DependencyNode> rationale;

  Json ToJson() const;
  // Graphviz digraph: one cluster per modality holding one cluster per
  // concept, with weighted edges from rationale tokens to the target.
  std::string ToDot() const;
};

// Throws kNoRationale when `target` was not rationalized in `phi` and
// kMissingLabel when a position has no label.
DependencyMap BuildDependencyMap(std::span<const concepts::LabeledToken> labels,
                                 const tensor::InterpretabilityMatrix& phi, size_t target);

}  // namespace ratex::analytics

#endif  // RATEX_ANALYTICS_DEPENDENCY_MAP_H_
