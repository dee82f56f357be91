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

#include "ratex/pipeline/pipeline.h"

#include <algorithm>
#include <map>

#include "ratex/analytics/density.h"
#include "ratex/analytics/dependency_map.h"
#include "ratex/analytics/heatmap.h"
#include "ratex/common/errors.h"
#include "ratex/common/random.h"
#include "ratex/common/thread_pool.h"
#include "ratex/concepts/concept_mapper.h"
#include "ratex/concepts/taxonomy.h"
#include "ratex/model/model_loader.h"
#include "ratex/rationale/rationale_io.h"
#include "ratex/rationale/rationalizer.h"
#include "ratex/tensor/concept_matrix.h"
#include "ratex/tensor/interpretability_matrix.h"
#include "ratex/tensor/interpretability_tensor.h"
#include "ratex/testbed/corpus.h"

namespace ratex::pipeline {
namespace {

constexpr std::string_view kRationaleSetKind = "rationale_set";
constexpr std::string_view kRationaleRunKind = "rationale_run";
constexpr std::string_view kLabelsKind = "labels";
constexpr std::string_view kPhiKind = "interpretability_matrix";
constexpr std::string_view kMapRunKind = "map_run";

std::string TrialFile(size_t trial) { return "trial_" + std::to_string(trial) + ".json"; }

Json TargetJson(const TargetRef& ref) {
  return {{"snippet", ref.snippet}, {"trial", ref.trial}, {"target_pos", ref.target}};
}

struct SnippetTrial {
  std::string snippet;
  size_t trial = 0;
};

// (snippet, trial) pairs listed in a rationale or map manifest.
std::vector<SnippetTrial> ListedFiles(const Json& manifest) {
  std::vector<SnippetTrial> out;
  for (const Json& f : manifest.at("files")) {
    out.push_back({f.at("snippet").get<std::string>(), f.at("trial").get<size_t>()});
  }
  return out;
}

void WriteBoth(const fs::path& stem, const Json& doc, const std::string& csv) {
  WriteJsonFile(fs::path(stem).concat(".json"), doc);
  WriteTextFile(fs::path(stem).concat(".csv"), csv);
}

tensor::InterpretabilityTensor ReadTensor(const fs::path& path) {
  return tensor::InterpretabilityTensor::FromJson(ReadJsonFile(path), tensor::kTensorKind);
}

}  // namespace

TrainSummary TrainNgram(const fs::path& corpus, const model::NgramOptions& options,
                        const fs::path& out) {
  const std::vector<testbed::CorpusEntry> entries = testbed::ReadCorpus(corpus);
  std::vector<std::string> sources;
  sources.reserve(entries.size());
  for (const testbed::CorpusEntry& e : entries) sources.push_back(e.source);
  const model::MaskedNgramModel trained = model::MaskedNgramModel::TrainFromTexts(sources, options);
  trained.Save(out);
  return {sources.size(), trained.vocab_size(), trained.context_count()};
}

testbed::Testbed BuildTestbedStage(const BuildTestbedConfig& config) {
  const std::vector<testbed::CorpusEntry> corpus = testbed::ReadCorpus(config.corpus);
  const std::unique_ptr<model::LanguageModel> lm = model::LoadModel(config.model);
  testbed::Testbed built = testbed::BuildTestbed(corpus, config.options, *lm);
  testbed::WriteTestbed(config.out, built);
  return built;
}

RationalizeSummary Rationalize(const RationalizeConfig& config) {
  const testbed::Testbed tb = testbed::ReadTestbed(config.testbed);
  const size_t trials = config.trials.value_or(tb.trials);
  if (trials == 0) Fail(ErrorCode::kInvalidArgument, "trial count must be at least 1");
  const std::unique_ptr<model::LanguageModel> lm = model::LoadModel(config.model);

  struct Outcome {
    uint64_t evaluations = 0;
    std::vector<size_t> uncovered;
    std::optional<std::string> error;
  };
  const size_t tasks = tb.snippets.size() * trials;
  std::vector<Outcome> outcomes(tasks);
  ParallelFor(tasks, config.jobs, [&](size_t i) {
    const testbed::Snippet& snippet = tb.snippets[i / trials];
    const size_t trial = i % trials;
    Outcome& outcome = outcomes[i];
    const uint64_t tie_seed = DeriveSeed(config.seed, {HashString(snippet.id), trial});
    try {
      const std::vector<model::VocabId> ids = snippet.Ids();
      const std::vector<size_t> targets = rationale::GeneratedTargets(
          config.prompt_targets ? 0 : snippet.boundary, snippet.tokens.size());
      rationale::RationalizeOptions options;
      options.tie_break_seed = tie_seed;
      const std::vector<rationale::RationaleResult> results =
          rationale::RationalizeSnippet(*lm, ids, targets, options, 1);
      for (const rationale::RationaleResult& r : results) {
        outcome.evaluations += r.evaluations_used;
        if (!r.covered) outcome.uncovered.push_back(r.target_position);
      }
      Json doc = MakeDocument(kRationaleSetKind);
      doc["snippet"] = snippet.id;
      doc["trial"] = trial;
      doc["tie_break_seed"] = tie_seed;
      doc["size"] = snippet.tokens.size();
      doc["boundary"] = snippet.boundary;
      doc["evaluations"] = outcome.evaluations;
      doc["results"] = rationale::ToJson(results);
      WriteJsonFile(config.out / "rationales" / snippet.id / TrialFile(trial), doc);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::kIoError) throw;
      outcome.error = e.what();
    }
  });

  RationalizeSummary summary;
  Json files = Json::array();
  for (size_t i = 0; i < tasks; ++i) {
    const std::string& id = tb.snippets[i / trials].id;
    const size_t trial = i % trials;
    const Outcome& outcome = outcomes[i];
    if (outcome.error) {
      summary.errored.push_back({{id, trial, 0}, *outcome.error});
      continue;
    }
    ++summary.files;
    summary.evaluations += outcome.evaluations;
    for (size_t t : outcome.uncovered) summary.uncovered.push_back({id, trial, t});
    files.push_back({{"snippet", id},
                     {"trial", trial},
                     {"path", "rationales/" + id + "/" + TrialFile(trial)},
                     {"evaluations", outcome.evaluations}});
  }
  Json manifest = MakeDocument(kRationaleRunKind);
  manifest["testbed"] = tb.id;
  manifest["model"] = lm->name();
  manifest["trials"] = trials;
  manifest["seed"] = config.seed;
  manifest["prompt_targets"] = config.prompt_targets;
  manifest["total_evaluations"] = summary.evaluations;
  manifest["files"] = files;
  Json uncovered = Json::array();
  for (const TargetRef& ref : summary.uncovered) uncovered.push_back(TargetJson(ref));
  manifest["uncovered"] = uncovered;
  Json errored = Json::array();
  for (const auto& [ref, message] : summary.errored) {
    errored.push_back({{"snippet", ref.snippet}, {"trial", ref.trial}, {"error", message}});
  }
  manifest["errored"] = errored;
  WriteJsonFile(config.out / "manifest.json", manifest);
  return summary;
}

MapSummary Map(const MapConfig& config) {
  const testbed::Testbed tb = testbed::ReadTestbed(config.testbed);
  const Json run = ReadJsonFile(config.rationales / "manifest.json");
  CheckDocument(run, kRationaleRunKind);
  if (run.at("testbed").get<std::string>() != tb.id) {
    Fail(ErrorCode::kInconsistentSnippet, "rationales were extracted from testbed " +
                                              run.at("testbed").get<std::string>() + ", not " +
                                              tb.id);
  }
  const concepts::Taxonomy taxonomy = concepts::Taxonomy::Load(config.taxonomy);

  std::map<std::string, const testbed::Snippet*> by_id;
  for (const testbed::Snippet& s : tb.snippets) by_id[s.id] = &s;
  const std::vector<SnippetTrial> listed = ListedFiles(run);
  for (const SnippetTrial& f : listed) {
    if (!by_id.count(f.snippet)) {
      Fail(ErrorCode::kInconsistentSnippet, "unknown snippet " + f.snippet);
    }
  }

  // Labels depend only on the snippet text.
  std::map<std::string, std::vector<concepts::LabeledToken>> labels;
  for (const SnippetTrial& f : listed) labels[f.snippet];
  std::vector<std::string> label_ids;
  for (const auto& [id, unused] : labels) label_ids.push_back(id);
  std::vector<std::vector<concepts::LabeledToken>> computed(label_ids.size());
  ParallelFor(label_ids.size(), config.jobs, [&](size_t i) {
    const testbed::Snippet& s = *by_id.at(label_ids[i]);
    const std::vector<model::ByteSpan> spans = s.Spans();
    computed[i] = concepts::LabelTokens(s.text, spans, concepts::ParseLanguage(s.language),
                                        taxonomy);
    Json doc = MakeDocument(kLabelsKind);
    doc["snippet"] = s.id;
    doc["taxonomy_id"] = taxonomy.id();
    doc["tokens"] = concepts::ToJson(computed[i]);
    WriteJsonFile(config.out / "labels" / (s.id + ".json"), doc);
  });
  for (size_t i = 0; i < label_ids.size(); ++i) labels[label_ids[i]] = std::move(computed[i]);

  std::vector<std::pair<size_t, size_t>> counts(listed.size());
  ParallelFor(listed.size(), config.jobs, [&](size_t i) {
    const SnippetTrial& f = listed[i];
    const testbed::Snippet& s = *by_id.at(f.snippet);
    const Json set = ReadJsonFile(config.rationales / "rationales" / f.snippet / TrialFile(f.trial));
    CheckDocument(set, kRationaleSetKind);
    const std::vector<rationale::RationaleResult> results =
        rationale::RationalesFromJson(set.at("results"));
    const tensor::InterpretabilityMatrix phi =
        tensor::InterpretabilityMatrix::Build(s.tokens.size(), results);
    Json phi_doc = MakeDocument(kPhiKind);
    phi_doc["snippet"] = f.snippet;
    phi_doc["trial"] = f.trial;
    phi_doc.update(phi.ToJson());
    WriteJsonFile(config.out / "phi" / f.snippet / TrialFile(f.trial), phi_doc);

    tensor::ConceptMatrix cm = tensor::MapPhi(phi, labels.at(f.snippet), taxonomy);
    cm.meta = {{"snippet", f.snippet}, {"trial", f.trial}};
    WriteJsonFile(config.out / "concepts" / f.snippet / TrialFile(f.trial),
                  cm.ToJson(tensor::kConceptMatrixKind));
    counts[i] = {phi.cell_count(), cm.TotalCount()};
  });

  MapSummary summary;
  Json files = Json::array();
  for (size_t i = 0; i < listed.size(); ++i) {
    ++summary.matrices;
    summary.phi_cells += counts[i].first;
    summary.concept_observations += counts[i].second;
    files.push_back({{"snippet", listed[i].snippet},
                     {"trial", listed[i].trial},
                     {"phi_cells", counts[i].first},
                     {"concept_observations", counts[i].second}});
  }
  Json manifest = MakeDocument(kMapRunKind);
  manifest["testbed"] = tb.id;
  manifest["taxonomy_id"] = taxonomy.id();
  manifest["phi_cells"] = summary.phi_cells;
  manifest["concept_observations"] = summary.concept_observations;
  manifest["files"] = files;
  WriteJsonFile(config.out / "manifest.json", manifest);
  return summary;
}

ReduceSummary ReduceStage(const fs::path& map_dir, tensor::Aggregation g, const fs::path& out) {
  const Json run = ReadJsonFile(map_dir / "manifest.json");
  CheckDocument(run, kMapRunKind);
  std::vector<tensor::ConceptMatrix> all;
  std::map<size_t, std::vector<tensor::ConceptMatrix>> by_trial;
  for (const SnippetTrial& f : ListedFiles(run)) {
    tensor::ConceptMatrix cm = tensor::ConceptMatrix::FromJson(
        ReadJsonFile(map_dir / "concepts" / f.snippet / TrialFile(f.trial)),
        tensor::kConceptMatrixKind);
    by_trial[f.trial].push_back(cm);
    all.push_back(std::move(cm));
  }
  if (all.empty()) Fail(ErrorCode::kEmptyInput, "map directory lists no matrices");

  tensor::InterpretabilityTensor pooled = tensor::Reduce(all, g);
  pooled.meta["testbed"] = run.at("testbed");
  WriteJsonFile(out / "tensor.json", pooled.ToJson(tensor::kTensorKind));
  for (const auto& [trial, matrices] : by_trial) {
    tensor::InterpretabilityTensor t = tensor::Reduce(matrices, g);
    t.meta["trial"] = trial;
    t.meta["testbed"] = run.at("testbed");
    WriteJsonFile(out / "trials" / TrialFile(trial), t.ToJson(tensor::kTensorKind));
  }
  return {all.size(), by_trial.size(), pooled.TotalCount()};
}

void AnalyzeHeatmap(const HeatmapConfig& config) {
  std::vector<fs::path> paths;
  for (const auto& entry : fs::directory_iterator(config.reduce / "trials")) {
    if (entry.path().extension() == ".json") paths.push_back(entry.path());
  }
  std::sort(paths.begin(), paths.end());
  if (paths.empty()) Fail(ErrorCode::kEmptyInput, "no trial tensors under " + config.reduce.string());
  std::vector<tensor::InterpretabilityTensor> trials;
  for (const fs::path& p : paths) trials.push_back(ReadTensor(p));
  analytics::HeatmapOptions options;
  options.min_values = config.min_values;
  options.replicates = config.replicates;
  options.seed = config.seed;
  const analytics::HeatmapReport report = analytics::Heatmap(trials, options);
  WriteBoth(config.out / "heatmap", report.ToJson(), report.ToCsv());
}

analytics::FrequencyReport AnalyzeFrequency(const fs::path& reduce, analytics::ConceptSide side,
                                            const fs::path& out) {
  const analytics::FrequencyReport report =
      analytics::Frequency(ReadTensor(reduce / "tensor.json"), side);
  WriteBoth(out / "frequency", report.ToJson(), report.ToCsv());
  return report;
}

void AnalyzeDensity(const std::vector<DensityInput>& inputs, size_t bins,
                    analytics::ConceptSide side, const fs::path& out) {
  if (inputs.empty()) Fail(ErrorCode::kEmptyInput, "density needs at least one tensor");
  std::vector<tensor::InterpretabilityTensor> tensors;
  tensors.reserve(inputs.size());
  for (const DensityInput& in : inputs) tensors.push_back(ReadTensor(in.reduce / "tensor.json"));
  std::vector<analytics::LabeledTensor> labeled;
  for (size_t i = 0; i < inputs.size(); ++i) labeled.push_back({inputs[i].testbed, &tensors[i]});
  const analytics::DensityReport report = analytics::Density(labeled, bins, side);
  WriteBoth(out / "density", report.ToJson(), report.ToCsv());
}

void Explain(const ExplainConfig& config) {
  const Json labels_doc = ReadJsonFile(config.map / "labels" / (config.snippet + ".json"));
  CheckDocument(labels_doc, kLabelsKind);
  const std::vector<concepts::LabeledToken> labels =
      concepts::LabeledTokensFromJson(labels_doc.at("tokens"));
  const Json phi_doc =
      ReadJsonFile(config.map / "phi" / config.snippet / TrialFile(config.trial));
  CheckDocument(phi_doc, kPhiKind);
  const tensor::InterpretabilityMatrix phi = tensor::InterpretabilityMatrix::FromJson(phi_doc);
  if (config.target >= phi.size()) {
    Fail(ErrorCode::kPositionOutOfRange, "target " + std::to_string(config.target) +
                                             " outside snippet of size " +
                                             std::to_string(phi.size()));
  }
  const analytics::DependencyMap map = analytics::BuildDependencyMap(labels, phi, config.target);
  Json doc = map.ToJson();
  doc["snippet"] = config.snippet;
  doc["trial"] = config.trial;
  WriteJsonFile(fs::path(config.out).concat(".json"), doc);
  WriteTextFile(fs::path(config.out).concat(".dot"), map.ToDot());
}

}  // namespace ratex::pipeline
