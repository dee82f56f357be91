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

#ifndef RATEX_PIPELINE_PIPELINE_H_
#define RATEX_PIPELINE_PIPELINE_H_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "ratex/analytics/frequency.h"
#include "ratex/common/json_io.h"
#include "ratex/model/ngram_model.h"
#include "ratex/tensor/aggregation.h"
#include "ratex/testbed/testbed.h"

// End-to-end stages. Each stage reads the previous stage's directory and
// writes its own; every file is a versioned JSON document.
//
//   train-ngram    <model>.json
//   build-testbed  <testbed>/manifest.json, snippets/<id>.json
//   rationalize    <run>/manifest.json, rationales/<id>/trial_<k>.json
//   map            <map>/manifest.json, labels/<id>.json,
//                  phi/<id>/trial_<k>.json, concepts/<id>/trial_<k>.json
//   reduce         <reduce>/tensor.json, trials/trial_<k>.json
//   analyze        heatmap / frequency / density .json and .csv
//   explain        <prefix>.json, <prefix>.dot
namespace ratex::pipeline {

namespace fs = std::filesystem;

struct TrainSummary {
  size_t sequences = 0;
  size_t vocab_size = 0;
  size_t contexts = 0;
};

TrainSummary TrainNgram(const fs::path& corpus, const model::NgramOptions& options,
                        const fs::path& out);

struct BuildTestbedConfig {
  fs::path corpus;
  std::string model;  // LoadModel spec
  testbed::TestbedOptions options;
  fs::path out;
};

testbed::Testbed BuildTestbedStage(const BuildTestbedConfig& config);

struct RationalizeConfig {
  std::string model;
  fs::path testbed;
  // Defaults to the testbed manifest's trial count.
  std::optional<size_t> trials;
  uint64_t seed = 0;
  size_t jobs = 0;
  fs::path out;
  // Also rationalize prompt tokens (every position from 1), not only the
  // generated ones.
  bool prompt_targets = false;
};

struct TargetRef {
  std::string snippet;
  size_t trial = 0;
  size_t target = 0;
};

struct RationalizeSummary {
  size_t files = 0;
  uint64_t evaluations = 0;
  std::vector<TargetRef> uncovered;
  // Snippet-trials that failed with a toolkit error; the run continues.
  std::vector<std::pair<TargetRef, std::string>> errored;
};

// Trial k of snippet s breaks ties with DeriveSeed(seed, {hash(s), k}).
RationalizeSummary Rationalize(const RationalizeConfig& config);

struct MapConfig {
  fs::path testbed;
  fs::path rationales;
  fs::path taxonomy;
  size_t jobs = 0;
  fs::path out;
};

struct MapSummary {
  size_t matrices = 0;
  size_t phi_cells = 0;
  size_t concept_observations = 0;
};

MapSummary Map(const MapConfig& config);

struct ReduceSummary {
  size_t matrices = 0;
  size_t trials = 0;
  size_t observations = 0;
};

// tensor.json pools every snippet-trial; trials/trial_<k>.json pools the
// snippets of trial k.
ReduceSummary ReduceStage(const fs::path& map_dir, tensor::Aggregation g, const fs::path& out);

struct HeatmapConfig {
  fs::path reduce;
  size_t min_values = 100;
  size_t replicates = 200;
  uint64_t seed = 0;
  fs::path out;  // writes heatmap.json and heatmap.csv
};

void AnalyzeHeatmap(const HeatmapConfig& config);

// Reads tensor.json of a reduce directory; writes frequency.json/.csv.
analytics::FrequencyReport AnalyzeFrequency(const fs::path& reduce, analytics::ConceptSide side,
                                            const fs::path& out);

struct DensityInput {
  std::string testbed;
  fs::path reduce;
};

void AnalyzeDensity(const std::vector<DensityInput>& inputs, size_t bins,
                    analytics::ConceptSide side, const fs::path& out);

struct ExplainConfig {
  fs::path map;
  std::string snippet;
  size_t trial = 0;
  size_t target = 0;
  fs::path out;  // prefix; writes <out>.json and <out>.dot
};

void Explain(const ExplainConfig& config);

}  // namespace ratex::pipeline

#endif  // RATEX_PIPELINE_PIPELINE_H_
