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

#ifndef RATEX_ANALYTICS_HEATMAP_H_
#define RATEX_ANALYTICS_HEATMAP_H_

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "ratex/common/json_io.h"
#include "ratex/tensor/interpretability_tensor.h"

namespace ratex::analytics {

using tensor::ConceptPair;
using tensor::InterpretabilityTensor;

struct HeatmapOptions {
  // Pooled observations are resampled with replacement up to this count.
  size_t min_values = 100;
  size_t replicates = 200;
  double confidence = 0.95;
  uint64_t seed = 0;
};

struct HeatmapCell {
  // Median of the cell's value across the trials where it appears.
  double median = 0.0;
  size_t trials = 0;
  size_t observations = 0;  // pooled raw values before resampling
  size_t values = 0;        // values used for interval estimation
  double ci_low = 0.0;
  double ci_high = 0.0;
};

struct HeatmapReport {
  std::vector<std::string> tgt_axis;
  std::vector<std::string> src_axis;
  std::map<ConceptPair, HeatmapCell> cells;
  // Median of all pooled observations of each target row.
  std::map<std::string, double> row_medians;

  Json ToJson() const;
  // Dense [tgt x src] grid of medians.
  std::string ToCsv() const;
};

// One tensor per trial. Each cell's pooled observations are bootstrapped
// (seeded per cell) to at least `min_values`; the interval is the percentile
// interval of the median over `replicates` resamples. Throws kEmptyInput.
HeatmapReport Heatmap(std::span<const InterpretabilityTensor> trials,
                      const HeatmapOptions& options = {});

}  // namespace ratex::analytics

#endif  // RATEX_ANALYTICS_HEATMAP_H_
