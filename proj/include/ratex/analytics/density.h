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

#ifndef RATEX_ANALYTICS_DENSITY_H_
#define RATEX_ANALYTICS_DENSITY_H_

#include <span>
#include <string>
#include <vector>

#include "ratex/analytics/frequency.h"
#include "ratex/common/json_io.h"
#include "ratex/tensor/interpretability_tensor.h"

namespace ratex::analytics {

struct DensityEntry {
  std::string concept_name;
  std::string testbed;
  size_t count = 0;
  // Equal-width bins over [0, 1]; 1.0 falls in the last bin.
  std::vector<size_t> histogram;
  double p25 = 0.0;
  double p50 = 0.0;
  double p75 = 0.0;
  double max = 0.0;
};

struct DensityReport {
  size_t bins = 20;
  // Ordered by concept, then testbed.
  std::vector<DensityEntry> entries;

  Json ToJson() const;
  std::string ToCsv() const;
};

struct LabeledTensor {
  std::string testbed;
  const tensor::InterpretabilityTensor* tensor = nullptr;
};

// Per (concept, testbed) distribution of pooled observations. Concepts with
// no observations are omitted.
DensityReport Density(std::span<const LabeledTensor> tensors, size_t bins = 20,
                      ConceptSide side = ConceptSide::kSource);

}  // namespace ratex::analytics

#endif  // RATEX_ANALYTICS_DENSITY_H_
