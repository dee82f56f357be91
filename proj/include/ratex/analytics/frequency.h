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

#ifndef RATEX_ANALYTICS_FREQUENCY_H_
#define RATEX_ANALYTICS_FREQUENCY_H_

#include <string>
#include <vector>

#include "ratex/common/json_io.h"
#include "ratex/tensor/interpretability_tensor.h"

namespace ratex::analytics {

enum class ConceptSide { kSource, kTarget };

struct FrequencyRecord {
  std::string concept_name;
  size_t frequency = 0;
  double mean = 0.0;
  double std = 0.0;  // population
  double proportion = 0.0;
  double weight = 0.0;  // log10(frequency + 1)
};

struct FrequencyReport {
  ConceptSide side = ConceptSide::kSource;
  size_t total = 0;
  // Frequency descending, then concept name.
  std::vector<FrequencyRecord> records;

  Json ToJson() const;
  std::string ToCsv() const;
};

// Pools the raw observations of every cell per source (or target) concept.
FrequencyReport Frequency(const tensor::InterpretabilityTensor& tensor,
                          ConceptSide side = ConceptSide::kSource);

}  // namespace ratex::analytics

#endif  // RATEX_ANALYTICS_FREQUENCY_H_
