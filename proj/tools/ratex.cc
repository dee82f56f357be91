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

// ratex: command-line driver for the rationale pipeline.

#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ratex/common/errors.h"
#include "ratex/pipeline/pipeline.h"
#include "ratex/testbed/prompt.h"

namespace {

using namespace ratex;
namespace fs = std::filesystem;

analytics::ConceptSide ParseSide(const std::string& side) {
  if (side == "source") return analytics::ConceptSide::kSource;
  if (side == "target") return analytics::ConceptSide::kTarget;
  Fail(ErrorCode::kInvalidArgument, "side must be source or target, got " + side);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Greedy rationales for language models of code"};
  app.require_subcommand(1);
  uint64_t seed = 0;
  size_t jobs = 0;
  auto add_seed = [&](CLI::App* cmd) {
    cmd->add_option("--seed", seed, "Base seed for every random stream")->capture_default_str();
  };
  auto add_jobs = [&](CLI::App* cmd) {
    cmd->add_option("--jobs", jobs, "Worker threads (0 = all cores)")->capture_default_str();
  };

  model::NgramOptions ngram;
  fs::path corpus;
  fs::path out;
  CLI::App* train = app.add_subcommand("train-ngram", "Train a masked n-gram backend");
  train->add_option("--corpus", corpus, "JSONL corpus or source directory")->required();
  train->add_option("--order", ngram.order)->capture_default_str()->check(CLI::Range(1, 16));
  train->add_option("--dropout", ngram.dropout_rate)->capture_default_str()->check(CLI::Range(0.0, 1.0));
  train->add_option("--alpha", ngram.alpha)->capture_default_str();
  train->add_option("--passes", ngram.passes)->capture_default_str()->check(CLI::PositiveNumber);
  train->add_option("--out", out, "Model file")->required();
  add_seed(train);

  std::string model_spec;
  std::string style = "tb1";
  testbed::TestbedOptions tb_options;
  CLI::App* build = app.add_subcommand("build-testbed", "Prompt a corpus and complete it");
  build->add_option("--corpus", corpus)->required();
  build->add_option("--model", model_spec, "Model file, remote or remote:<cmd>")->required();
  build->add_option("--style", style, "tb1, tb2, tb3 or tb4")->capture_default_str();
  build->add_option("--sequences", tb_options.n_sequences)->capture_default_str();
  build->add_option("--trials", tb_options.trials, "Trials recorded for rationalize")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  build->add_option("--max-new", tb_options.max_new)->capture_default_str();
  build->add_option("--id", tb_options.id, "Testbed id (default: style name)");
  build->add_option("--out", out)->required();
  add_seed(build);
  add_jobs(build);

  fs::path testbed_dir;
  std::optional<size_t> trials;
  bool prompt_targets = false;
  CLI::App* rationalize = app.add_subcommand("rationalize", "Extract greedy rationales");
  rationalize->add_option("--model", model_spec)->required();
  rationalize->add_option("--testbed", testbed_dir)->required();
  rationalize->add_option("--trials", trials, "Default: the testbed's trial count")
      ->check(CLI::PositiveNumber);
  rationalize->add_option("--out", out)->required();
  rationalize->add_flag("--prompt-targets", prompt_targets,
                        "Rationalize prompt tokens too, not only generated ones");
  add_seed(rationalize);
  add_jobs(rationalize);

  fs::path rationale_dir;
  fs::path taxonomy = RATEX_DEFAULT_TAXONOMY;
  CLI::App* map = app.add_subcommand("map", "Label tokens and map rationales to concepts");
  map->add_option("--testbed", testbed_dir)->required();
  map->add_option("--rationales", rationale_dir)->required();
  map->add_option("--taxonomy", taxonomy)->capture_default_str();
  map->add_option("--out", out)->required();
  add_jobs(map);

  fs::path map_dir;
  std::string g = "mean";
  CLI::App* reduce = app.add_subcommand("reduce", "Pool concept matrices into tensors");
  reduce->add_option("--map", map_dir)->required();
  reduce->add_option("--g", g, "mean, median, max, count or sum")->capture_default_str();
  reduce->add_option("--out", out)->required();

  CLI::App* analyze = app.add_subcommand("analyze", "Reports over reduced tensors");
  analyze->require_subcommand(1);
  fs::path reduce_dir;
  pipeline::HeatmapConfig heat;
  CLI::App* heatmap = analyze->add_subcommand("heatmap", "Median heatmap with bootstrap intervals");
  heatmap->add_option("--reduce", reduce_dir)->required();
  heatmap->add_option("--min-values", heat.min_values)->capture_default_str();
  heatmap->add_option("--replicates", heat.replicates)->capture_default_str();
  heatmap->add_option("--out", out)->required();
  add_seed(heatmap);
  std::string side = "source";
  CLI::App* frequency = analyze->add_subcommand("frequency", "Concept frequency table");
  frequency->add_option("--reduce", reduce_dir)->required();
  frequency->add_option("--side", side, "source or target")->capture_default_str();
  frequency->add_option("--out", out)->required();
  std::vector<std::string> density_inputs;
  size_t bins = 20;
  CLI::App* density = analyze->add_subcommand("density", "Per-concept distributions by testbed");
  density->add_option("--reduce", density_inputs, "<testbed>=<reduce dir>, repeatable")->required();
  density->add_option("--bins", bins)->capture_default_str()->check(CLI::PositiveNumber);
  density->add_option("--side", side)->capture_default_str();
  density->add_option("--out", out)->required();

  pipeline::ExplainConfig explain_config;
  CLI::App* explain = app.add_subcommand("explain", "Dependency map for one generated token");
  explain->add_option("--map", explain_config.map)->required();
  explain->add_option("--snippet", explain_config.snippet)->required();
  explain->add_option("--trial", explain_config.trial)->capture_default_str();
  explain->add_option("--target-pos", explain_config.target)->required();
  explain->add_option("--out", explain_config.out, "Output prefix")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*train) {
      ngram.seed = seed;
      const pipeline::TrainSummary s = pipeline::TrainNgram(corpus, ngram, out);
      std::cerr << "trained on " << s.sequences << " sequences: vocab " << s.vocab_size << ", "
                << s.contexts << " contexts\n";
    } else if (*build) {
      tb_options.style = testbed::ParsePromptStyle(style);
      tb_options.seed = seed;
      tb_options.jobs = jobs;
      const testbed::Testbed tb =
          pipeline::BuildTestbedStage({corpus, model_spec, tb_options, out});
      std::cerr << "testbed " << tb.id << ": " << tb.snippets.size() << " snippets, "
                << tb.skipped << " corpus entries skipped\n";
    } else if (*rationalize) {
      const pipeline::RationalizeSummary s =
          pipeline::Rationalize({model_spec, testbed_dir, trials, seed, jobs, out, prompt_targets});
      std::cerr << s.files << " rationale files, " << s.evaluations << " evaluations\n";
      if (!s.uncovered.empty()) {
        std::cerr << "warning: " << s.uncovered.size() << " targets not covered\n";
      }
      for (const auto& [ref, message] : s.errored) {
        std::cerr << "warning: " << ref.snippet << " trial " << ref.trial << ": " << message
                  << '\n';
      }
    } else if (*map) {
      const pipeline::MapSummary s =
          pipeline::Map({testbed_dir, rationale_dir, taxonomy, jobs, out});
      std::cerr << s.matrices << " matrices, " << s.phi_cells << " phi cells\n";
    } else if (*reduce) {
      const pipeline::ReduceSummary s =
          pipeline::ReduceStage(map_dir, tensor::ParseAggregation(g), out);
      std::cerr << s.matrices << " matrices over " << s.trials << " trials, " << s.observations
                << " observations\n";
    } else if (*heatmap) {
      heat.reduce = reduce_dir;
      heat.seed = seed;
      heat.out = out;
      pipeline::AnalyzeHeatmap(heat);
    } else if (*frequency) {
      pipeline::AnalyzeFrequency(reduce_dir, ParseSide(side), out);
    } else if (*density) {
      std::vector<pipeline::DensityInput> inputs;
      for (const std::string& arg : density_inputs) {
        const size_t eq = arg.find('=');
        if (eq == std::string::npos || eq == 0) {
          Fail(ErrorCode::kInvalidArgument, "expected <testbed>=<dir>, got " + arg);
        }
        inputs.push_back({arg.substr(0, eq), arg.substr(eq + 1)});
      }
      pipeline::AnalyzeDensity(inputs, bins, ParseSide(side), out);
    } else if (*explain) {
      pipeline::Explain(explain_config);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
