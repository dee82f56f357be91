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

// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero when any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ratex/analytics/heatmap.h"
#include "ratex/analytics/jaccard.h"
#include "ratex/common/json_io.h"
#include "ratex/common/random.h"
#include "ratex/concepts/concept_mapper.h"
#include "ratex/concepts/context_levels.h"
#include "ratex/model/code_tokenizer.h"
#include "ratex/model/model_loader.h"
#include "ratex/model/ngram_model.h"
#include "ratex/model/tokenize.h"
#include "ratex/pipeline/pipeline.h"
#include "ratex/rationale/brute_force.h"
#include "ratex/rationale/rationale_io.h"
#include "ratex/rationale/rationalizer.h"
#include "ratex/tensor/interpretability_tensor.h"
#include "ratex/testbed/corpus.h"
#include "ratex/testbed/prompt.h"
#include "ratex/testbed/testbed.h"
#include "unit/lookup_instances.h"
#include "unit/test_util.h"

namespace fs = std::filesystem;
using namespace ratex;
using Clock = std::chrono::steady_clock;

namespace {

// Collects the first few failure messages of a criterion.
class Checker {
 public:
  void Expect(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    ++failures_;
    if (failures_ <= 5) messages_ << (failures_ > 1 ? "; " : "") << what;
  }
  bool ok() const { return failures_ == 0; }
  std::string Summary() const {
    std::ostringstream out;
    out << checks_ << " checks";
    if (failures_) out << ", " << failures_ << " failed: " << messages_.str();
    return out.str();
  }

 private:
  size_t checks_ = 0;
  size_t failures_ = 0;
  std::ostringstream messages_;
};

double Seconds(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Spec form of the call-count law with 1-based target position t.
uint64_t CallCountLaw(size_t t, size_t k_steps) {
  uint64_t total = k_steps + 1;
  for (size_t k = 0; k < k_steps; ++k) total += t - 1 - k;
  return total;
}

bool Covers(const model::LanguageModel& lm, std::span<const model::VocabId> ids,
            std::span<const size_t> positions, size_t target) {
  return lm.Evaluate(model::ContextSubset::Select(ids, positions, target)).ArgMax() == ids[target];
}

std::vector<testbed::CorpusEntry> Corpus(const std::string& name) {
  return testbed::ReadCorpus(testing::Fixture("corpus/" + name));
}

model::MaskedNgramModel TrainDefault() {
  std::vector<std::string> sources;
  for (const auto& e : Corpus("train.jsonl")) sources.push_back(e.source);
  return model::MaskedNgramModel::TrainFromTexts(sources, model::NgramOptions{});
}

double Median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const size_t n = v.size();
  return n % 2 ? v[n / 2] : (v[n / 2 - 1] + v[n / 2]) / 2.0;
}

// Totals along the chain phi -> concept matrices -> tensor -> frequency.
void CheckConservation(const fs::path& map_dir, const fs::path& reduce_dir, Checker& c) {
  const Json manifest = ReadJsonFile(map_dir / "manifest.json");
  size_t phi_cells = 0;
  size_t concept_counts = 0;
  for (const Json& f : manifest.at("files")) {
    const std::string rel = f.at("snippet").get<std::string>() + "/trial_" +
                            std::to_string(f.at("trial").get<size_t>()) + ".json";
    phi_cells += ReadJsonFile(map_dir / "phi" / rel).at("cells").size();
    const Json concepts = ReadJsonFile(map_dir / "concepts" / rel);
    for (const Json& cell : concepts.at("cells")) {
      concept_counts += cell.at("count").get<size_t>();
    }
  }
  const auto pooled = tensor::InterpretabilityTensor::FromJson(ReadJsonFile(reduce_dir / "tensor.json"),
                                                               tensor::kTensorKind);
  const size_t tensor_counts = pooled.TotalCount();
  size_t trial_counts = 0;
  for (const auto& entry : fs::directory_iterator(reduce_dir / "trials")) {
    trial_counts += tensor::InterpretabilityTensor::FromJson(ReadJsonFile(entry.path()), tensor::kTensorKind)
                        .TotalCount();
  }
  std::ostringstream chain;
  chain << phi_cells << "/" << concept_counts << "/" << tensor_counts << "/" << trial_counts;
  c.Expect(phi_cells > 0, "no phi cells");
  c.Expect(concept_counts == phi_cells, "concept counts " + chain.str());
  c.Expect(tensor_counts == phi_cells, "tensor counts " + chain.str());
  c.Expect(trial_counts == phi_cells, "trial tensor counts " + chain.str());
  for (auto side : {analytics::ConceptSide::kSource, analytics::ConceptSide::kTarget}) {
    const analytics::FrequencyReport report = analytics::Frequency(pooled, side);
    size_t frequencies = 0;
    for (const auto& r : report.records) frequencies += r.frequency;
    c.Expect(frequencies == phi_cells, "frequency total " + std::to_string(frequencies));
  }
}

// Rationale files of a run: covered results must cover, every result obeys
// the call-count law.
void CheckRationaleRun(const model::LanguageModel& lm, const fs::path& testbed_dir, const fs::path& run_dir,
                       Checker& c, size_t* covered_out = nullptr) {
  const testbed::Testbed tb = testbed::ReadTestbed(testbed_dir);
  std::map<std::string, const testbed::Snippet*> by_id;
  for (const auto& s : tb.snippets) by_id[s.id] = &s;
  size_t covered = 0;
  const Json manifest = ReadJsonFile(run_dir / "manifest.json");
  for (const Json& f : manifest.at("files")) {
    const Json doc = ReadJsonFile(run_dir / f.at("path").get<std::string>());
    const testbed::Snippet& s = *by_id.at(doc.at("snippet").get<std::string>());
    const std::vector<model::VocabId> ids = s.Ids();
    for (const auto& r : rationale::RationalesFromJson(doc.at("results"))) {
      const std::vector<size_t> positions = r.Positions();
      c.Expect(r.evaluations_used == CallCountLaw(r.target_position + 1, r.steps.size()),
               "call count at " + s.id);
      if (r.covered) {
        ++covered;
        c.Expect(Covers(lm, ids, positions, r.target_position), "unsound rationale in " + s.id);
      } else {
        c.Expect(positions.size() == r.target_position, "uncovered result did not exhaust " + s.id);
      }
    }
  }
  if (covered_out) *covered_out = covered;
}

void CheckBootstrapFloor(const Json& heatmap, Checker& c) {
  c.Expect(!heatmap.at("cells").empty(), "empty heatmap");
  for (const Json& cell : heatmap.at("cells")) {
    c.Expect(cell.at("bootstrap_values").get<size_t>() >= 100,
             "cell " + cell.at("tgt").get<std::string>() + "/" + cell.at("src").get<std::string>());
  }
}

bool CoverageSoundness(std::string& detail) {
  const auto start = Clock::now();
  const model::MaskedNgramModel lm = TrainDefault();
  testbed::TestbedOptions options;
  options.n_sequences = 50;
  options.trials = 1;
  const testbed::Testbed tb = testbed::BuildTestbed(Corpus("desk50.jsonl"), options, lm);
  Checker c;
  size_t covered = 0;
  size_t sound = 0;
  size_t targets = 0;
  for (const testbed::Snippet& s : tb.snippets) {
    const std::vector<model::VocabId> ids = s.Ids();
    const auto results =
        rationale::RationalizeSnippet(lm, ids, rationale::GeneratedTargets(s.boundary, ids.size()));
    for (const auto& r : results) {
      ++targets;
      if (!r.covered) continue;
      ++covered;
      const bool ok = Covers(lm, ids, r.Positions(), r.target_position);
      sound += ok;
      c.Expect(ok, s.id);
    }
  }
  const double seconds = Seconds(start);
  c.Expect(tb.snippets.size() == 50, "snippet count");
  c.Expect(covered > 0, "nothing covered");
  c.Expect(seconds < 120.0, "runtime");
  std::ostringstream out;
  out << sound << "/" << covered << " covered rationales sound (" << targets << " targets), "
      << c.Summary() << ", " << seconds << " s";
  detail = out.str();
  return c.ok();
}

bool GreedyVsOracle(std::string& detail) {
  const auto start = Clock::now();
  Checker c;
  size_t minimal_matches = 0;
  for (uint64_t seed = 0; seed < 30; ++seed) {
    const testing::LookupInstance inst = testing::RandomLookupInstance(7000 + seed, 8);
    const auto greedy = rationale::RationalizeToken(*inst.model, inst.sequence, inst.target);
    const auto minimal = rationale::BruteForceRationale(*inst.model, inst.sequence, inst.target);
    const std::string tag = "instance " + std::to_string(seed);
    if (!minimal.empty()) {
      c.Expect(greedy.covered, tag + " not covered");
      c.Expect(minimal.front().size() <= greedy.steps.size(), tag + " below minimum");
      minimal_matches += minimal.front().size() == greedy.steps.size();
    }
    if (greedy.covered) {
      c.Expect(Covers(*inst.model, inst.sequence, greedy.Positions(), inst.target), tag + " unsound");
    }
  }
  const double seconds = Seconds(start);
  c.Expect(seconds < 30.0, "runtime");
  std::ostringstream out;
  out << "30 instances, greedy minimal in " << minimal_matches << ", " << c.Summary() << ", " << seconds
      << " s";
  detail = out.str();
  return c.ok();
}

bool CallCount(std::string& detail) {
  Checker c;
  size_t runs = 0;
  for (uint64_t seed = 0; seed < 30; ++seed) {
    const testing::LookupInstance inst = testing::RandomLookupInstance(9000 + seed, 8);
    for (size_t t = 1; t < inst.sequence.size(); ++t) {
      model::CountingModel counter(*inst.model);
      const auto r = rationale::RationalizeToken(counter, inst.sequence, t);
      c.Expect(counter.evaluations() == CallCountLaw(t + 1, r.steps.size()), "lookup instance");
      c.Expect(r.evaluations_used == counter.evaluations(), "reported count");
      ++runs;
    }
  }
  std::vector<std::string> sources;
  for (const auto& e : Corpus("train.jsonl")) sources.push_back(e.source);
  sources.resize(80);
  model::NgramOptions options;
  options.passes = 2;
  const auto lm = model::MaskedNgramModel::TrainFromTexts(sources, options);
  for (size_t i = 0; i < 5; ++i) {
    const std::vector<model::VocabId> ids = model::TokenizeText(lm, sources[i]).ids;
    for (size_t t = 1; t < std::min<size_t>(ids.size(), 40); ++t) {
      model::CountingModel counter(lm);
      const auto r = rationale::RationalizeToken(counter, ids, t);
      c.Expect(counter.evaluations() == CallCountLaw(t + 1, r.steps.size()), "ngram snippet");
      c.Expect(counter.evaluations() <= t * (t + 1) / 2 + t + 1, "quadratic bound");
      ++runs;
    }
  }
  detail = std::to_string(runs) + " rationalizations, " + c.Summary();
  return c.ok();
}

// Small real pipeline on the desk corpus.
struct SmallRun {
  testing::ScratchDir dir;

  SmallRun() {
    std::vector<testbed::CorpusEntry> train = Corpus("train.jsonl");
    train.resize(120);
    testbed::WriteCorpus(dir / "train.jsonl", train);
    model::NgramOptions ngram;
    ngram.passes = 4;
    pipeline::TrainNgram(dir / "train.jsonl", ngram, dir / "model.json");
    pipeline::BuildTestbedConfig build;
    build.corpus = testing::Fixture("corpus/desk50.jsonl");
    build.model = (dir / "model.json").string();
    build.options.n_sequences = 8;
    build.options.trials = 3;
    build.options.max_new = 24;
    build.options.jobs = 1;
    build.out = dir / "tb";
    pipeline::BuildTestbedStage(build);
    pipeline::RationalizeConfig rat;
    rat.model = build.model;
    rat.testbed = build.out;
    rat.seed = 1;
    rat.jobs = 1;
    rat.out = dir / "rat";
    pipeline::Rationalize(rat);
    pipeline::MapConfig map;
    map.testbed = build.out;
    map.rationales = rat.out;
    map.taxonomy = RATEX_TAXONOMY_FILE;
    map.jobs = 1;
    map.out = dir / "map";
    pipeline::Map(map);
    pipeline::ReduceStage(dir / "map", tensor::Aggregation::kMean, dir / "red");
  }
};

bool Conservation(std::string& detail) {
  Checker c;
  const SmallRun run;
  CheckConservation(run.dir / "map", run.dir / "red", c);
  // The same chain over a golden fixture run.
  const fs::path golden = testing::Golden("pipeline");
  const Json map = ReadJsonFile(golden / "map/manifest.json");
  const auto pooled = tensor::InterpretabilityTensor::FromJson(ReadJsonFile(golden / "red/tensor.json"),
                                                               tensor::kTensorKind);
  size_t listed = 0;
  for (const Json& f : map.at("files")) listed += f.at("phi_cells").get<size_t>();
  c.Expect(listed == map.at("phi_cells").get<size_t>(), "golden per-file phi cells");
  c.Expect(pooled.TotalCount() == listed, "golden tensor counts");
  size_t frequencies = 0;
  for (const auto& r : analytics::Frequency(pooled).records) frequencies += r.frequency;
  c.Expect(frequencies == listed, "golden frequency total");
  detail = "desk run and golden run, " + c.Summary();
  return c.ok();
}

bool ReductionOracles(std::string& detail) {
  Checker c;
  for (uint64_t seed = 0; seed < 10; ++seed) {
    Rng rng(500 + seed);
    std::vector<tensor::ConceptMatrix> matrices(5);
    std::map<tensor::ConceptPair, std::vector<double>> pooled;
    for (auto& m : matrices) {
      m.taxonomy_id = "t";
      for (const char* tgt : {"a", "b", "c", "d"}) {
        for (const char* src : {"a", "b", "c", "d"}) {
          if (rng.Bernoulli(0.5)) continue;
          auto& cell = m.cells[{tgt, src}];
          const size_t n = 1 + rng.UniformIndex(8);
          for (size_t i = 0; i < n; ++i) cell.raw.push_back(rng.Uniform01());
          cell.value = cell.raw.front();
          pooled[{tgt, src}].insert(pooled[{tgt, src}].end(), cell.raw.begin(), cell.raw.end());
        }
      }
    }
    const tensor::InterpretabilityTensor mean = tensor::Reduce(matrices, tensor::Aggregation::kMean);
    const tensor::InterpretabilityTensor median = tensor::Reduce(matrices, tensor::Aggregation::kMedian);
    const tensor::InterpretabilityTensor max = tensor::Reduce(matrices, tensor::Aggregation::kMax);
    const tensor::InterpretabilityTensor count = tensor::Reduce(matrices, tensor::Aggregation::kCount);
    c.Expect(mean.cells.size() == pooled.size(), "cell set");
    for (const auto& [key, values] : pooled) {
      double total = 0.0;
      for (double v : values) total += v;
      c.Expect(std::abs(mean.cells.at(key).value - total / static_cast<double>(values.size())) <= 1e-12, "mean");
      c.Expect(std::abs(median.cells.at(key).value - Median(values)) <= 1e-12, "median");
      c.Expect(max.cells.at(key).value == *std::max_element(values.begin(), values.end()), "max");
      c.Expect(count.cells.at(key).value == static_cast<double>(values.size()), "count");
    }
  }
  Rng rng(77);
  std::vector<tensor::InterpretabilityTensor> trials;
  std::vector<double> values;
  for (int k = 0; k < 30; ++k) {
    tensor::InterpretabilityTensor t;
    t.taxonomy_id = "t";
    const double v = rng.Uniform01();
    values.push_back(v);
    t.cells[{"a", "b"}] = {v, {v}};
    t.meta = {{"trial", 29 - k}};
    trials.push_back(t);
  }
  const auto merged = tensor::MergeTrials(trials, tensor::Aggregation::kMedian);
  c.Expect(merged.cells.at({"a", "b"}).value == Median(values), "merge median");
  detail = "g in {mean, median, max, count} over 10 five-matrix fixtures, 30-trial merge, " + c.Summary();
  return c.ok();
}

bool BootstrapFloor(std::string& detail) {
  Checker c;
  std::vector<tensor::InterpretabilityTensor> trials(3);
  Rng rng(3);
  size_t raw_count = 1;
  for (size_t k = 0; k < trials.size(); ++k) {
    trials[k].taxonomy_id = "t";
    trials[k].meta = {{"trial", k}};
  }
  // Pooled raw counts 1..7, one cell per count.
  for (size_t cell = 0; cell < 7; ++cell, ++raw_count) {
    for (size_t i = 0; i < raw_count; ++i) {
      auto& target = trials[i % trials.size()].cells[{"c" + std::to_string(cell), "s"}];
      target.raw.push_back(rng.Uniform01());
      target.value = target.raw.front();
    }
  }
  const analytics::HeatmapReport report = analytics::Heatmap(trials);
  c.Expect(report.cells.size() == 7, "cell count");
  std::set<size_t> observed;
  for (const auto& [key, cell] : report.cells) {
    observed.insert(cell.observations);
    c.Expect(cell.values >= 100, key.tgt);
    c.Expect(cell.ci_low <= cell.ci_high, key.tgt + " interval");
  }
  c.Expect(observed == std::set<size_t>{1, 2, 3, 4, 5, 6, 7}, "raw counts");
  CheckBootstrapFloor(report.ToJson(), c);
  detail = "raw counts 1-7, " + c.Summary();
  return c.ok();
}

bool MappingGolden(std::string& detail) {
  Checker c;
  const concepts::Taxonomy taxonomy = concepts::Taxonomy::Load(RATEX_TAXONOMY_FILE);
  size_t agree = 0;
  size_t total = 0;
  std::set<std::string> python_labels;
  for (const char* name : {"python_method.json", "java_levels.json"}) {
    const Json doc = ReadJsonFile(testing::Fixture(std::string("mapping/") + name));
    const std::string source = doc.at("source");
    std::vector<model::ByteSpan> spans;
    for (const auto& piece : model::SplitCode(source)) spans.push_back(piece.span);
    const bool levels = doc.contains("focal_method");
    const auto labels =
        levels ? concepts::LabelContextLevels(source, spans, doc.at("focal_method").get<std::string>(), taxonomy)
               : concepts::LabelTokens(source, spans, concepts::ParseLanguage(doc.at("language").get<std::string>()),
                                       taxonomy);
    const Json& expected = doc.at("tokens");
    c.Expect(labels.size() == expected.size(), std::string(name) + " token count");
    for (size_t i = 0; i < std::min(labels.size(), expected.size()); ++i) {
      ++total;
      const bool same = labels[i].text == expected[i][0] && labels[i].label.name == expected[i][1];
      agree += same;
      c.Expect(same, std::string(name) + " token " + std::to_string(i));
      if (!levels) python_labels.insert(expected[i][1].get<std::string>());
    }
    if (!levels) c.Expect(expected.size() >= 40, "python fixture size");
  }
  for (const char* label : {"conditional", "loops", "oop", "punctuation", "identifier"}) {
    c.Expect(python_labels.count(label) == 1, std::string("python fixture lacks ") + label);
  }
  c.Expect(std::any_of(python_labels.begin(), python_labels.end(),
                       [](const std::string& l) { return l.starts_with("nl_"); }),
           "python fixture lacks nl labels");
  detail = std::to_string(agree) + "/" + std::to_string(total) + " tokens agree, " + c.Summary();
  return c.ok();
}

bool TestbedInvariants(std::string& detail) {
  Checker c;
  const std::vector<testbed::CorpusEntry> corpus = Corpus("desk50.jsonl");
  size_t prompts = 0;
  for (const auto& entry : corpus) {
    const testbed::MethodLayout layout = testbed::AnalyzeMethod(entry.source);
    if (!layout.docstring) continue;
    const size_t body_begin = layout.body_lines.empty() ? entry.source.size() : layout.body_lines.front().begin;
    c.Expect(layout.signature.end <= layout.docstring->begin, entry.id + " signature overlaps");
    c.Expect(layout.docstring->end <= body_begin, entry.id + " docstring overlaps body");
    const std::string doc = testbed::DocstringText(entry.source, layout);
    const std::string signature =
        entry.source.substr(layout.signature.begin, layout.signature.end - layout.signature.begin);
    const auto tb3 = testbed::MakePrompt(entry.source, testbed::PromptStyle::kTB3, 0);
    const auto tb4 = testbed::MakePrompt(entry.source, testbed::PromptStyle::kTB4, 0);
    // Built only from the signature and docstring spans, which lie before
    // the first body statement.
    c.Expect(tb3.text == doc + signature, entry.id + " TB3");
    c.Expect(tb4.text == doc, entry.id + " TB4");
    for (const auto& line : layout.body_lines) {
      const std::string text = entry.source.substr(line.begin, line.end - line.begin);
      c.Expect(tb3.text.find(text) == std::string::npos, entry.id + " TB3 contains a body line");
    }
    prompts += 2;
  }

  std::vector<std::string> sources;
  for (const auto& e : Corpus("train.jsonl")) sources.push_back(e.source);
  sources.resize(100);
  model::NgramOptions ngram;
  ngram.passes = 2;
  const auto lm = model::MaskedNgramModel::TrainFromTexts(sources, ngram);
  testbed::TestbedOptions options;
  options.n_sequences = 10;
  options.trials = 30;
  options.max_new = 16;
  options.seed = 21;
  const testbed::Testbed a = testbed::BuildTestbed(corpus, options, lm);
  options.jobs = 4;
  const testbed::Testbed b = testbed::BuildTestbed(corpus, options, lm);
  c.Expect(a.snippets == b.snippets, "replicated testbed differs");
  for (const testbed::Snippet& s : a.snippets) {
    const auto& entry =
        *std::find_if(corpus.begin(), corpus.end(), [&](const auto& e) { return e.id == s.source_id; });
    const testbed::Prompt replay = testbed::MakePrompt(entry.source, testbed::PromptStyle::kTB1, s.prompt_seed);
    const testbed::MethodLayout layout = testbed::AnalyzeMethod(entry.source);
    c.Expect(replay.text == s.prompt, s.id + " prompt replay");
    c.Expect(replay.cut == s.cut, s.id + " cut replay");
    c.Expect(s.cut == testbed::TruncationCut(layout.body_lines.size(), s.prompt_seed), s.id + " cut law");
  }
  detail = std::to_string(prompts) + " TB3/TB4 prompts, " + std::to_string(a.snippets.size()) +
           " replayed TB1 snippets, " + c.Summary();
  return c.ok();
}

bool ScaledPipeline(std::string& detail) {
  const auto start = Clock::now();
  Checker c;
  testing::ScratchDir dir;
  pipeline::TrainNgram(testing::Fixture("corpus/train.jsonl"), model::NgramOptions{}, dir / "model.json");
  pipeline::BuildTestbedConfig build;
  build.corpus = testing::Fixture("corpus/desk50.jsonl");
  build.model = (dir / "model.json").string();
  build.options.style = testbed::PromptStyle::kTB1;
  build.options.n_sequences = 10;
  build.options.trials = 30;
  build.options.jobs = 0;
  build.out = dir / "tb";
  const testbed::Testbed tb = pipeline::BuildTestbedStage(build);
  pipeline::RationalizeConfig rat;
  rat.model = build.model;
  rat.testbed = build.out;
  rat.jobs = 0;
  rat.out = dir / "rat";
  const pipeline::RationalizeSummary rs = pipeline::Rationalize(rat);
  pipeline::MapConfig map;
  map.testbed = build.out;
  map.rationales = rat.out;
  map.taxonomy = RATEX_TAXONOMY_FILE;
  map.jobs = 0;
  map.out = dir / "map";
  const pipeline::MapSummary ms = pipeline::Map(map);
  const pipeline::ReduceSummary red = pipeline::ReduceStage(dir / "map", tensor::Aggregation::kMean, dir / "red");
  pipeline::HeatmapConfig heat;
  heat.reduce = dir / "red";
  heat.out = dir / "an";
  pipeline::AnalyzeHeatmap(heat);
  pipeline::AnalyzeFrequency(dir / "red", analytics::ConceptSide::kSource, dir / "an");
  pipeline::AnalyzeDensity({{tb.id, dir / "red"}}, 20, analytics::ConceptSide::kSource, dir / "an");
  const double seconds = Seconds(start);

  c.Expect(tb.snippets.size() == 10, "unique sequences");
  std::set<std::string> prompts;
  for (const auto& s : tb.snippets) prompts.insert(s.prompt);
  c.Expect(prompts.size() == 10, "distinct prompts");
  c.Expect(rs.files == 300, "rationale files");
  c.Expect(rs.errored.empty(), "errored targets");
  c.Expect(red.trials == 30, "trial tensors");
  c.Expect(ms.phi_cells == ms.concept_observations, "map conservation");
  for (const char* f : {"heatmap.json", "heatmap.csv", "frequency.json", "frequency.csv", "density.json",
                        "density.csv"}) {
    c.Expect(fs::exists(dir / "an" / f), std::string("missing ") + f);
  }
  CheckConservation(dir / "map", dir / "red", c);
  CheckBootstrapFloor(ReadJsonFile(dir / "an/heatmap.json"), c);
  const auto lm = model::LoadModel(build.model);
  size_t covered = 0;
  CheckRationaleRun(*lm, build.out, rat.out, c, &covered);
  c.Expect(seconds < 600.0, "runtime");
  std::ostringstream out;
  out << "10 x 30 TB1, " << rs.evaluations << " evaluations, " << covered << " covered, " << rs.uncovered.size()
      << " uncovered, " << ms.phi_cells << " phi cells, " << c.Summary() << ", " << seconds << " s";
  detail = out.str();
  return c.ok();
}

bool Jaccard(std::string& detail) {
  Checker c;
  using V = std::vector<size_t>;
  const auto j = [](const V& a, const V& b) { return analytics::JaccardAlignment(a, b, 16); };
  c.Expect(j({1, 2, 3}, {1, 2, 3}) == 1.0, "identity");
  c.Expect(j({1, 2}, {3, 4}) == 0.0, "disjoint");
  c.Expect(j({1, 2, 3}, {2, 3, 4}) == 0.5, "overlap");
  c.Expect(j({}, {}) == 1.0, "both empty");
  detail = c.Summary();
  return c.ok();
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<bool(std::string&)>>> criteria = {
      {"coverage-soundness", CoverageSoundness}, {"greedy-vs-oracle", GreedyVsOracle},
      {"call-count-law", CallCount},             {"conservation-chain", Conservation},
      {"reduction-oracles", ReductionOracles},   {"bootstrap-floor", BootstrapFloor},
      {"mapping-golden", MappingGolden},         {"testbed-invariants", TestbedInvariants},
      {"scaled-pipeline", ScaledPipeline},       {"jaccard", Jaccard},
  };
  int failed = 0;
  for (const auto& [name, check] : criteria) {
    std::string detail;
    bool ok = false;
    try {
      ok = check(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    failed += !ok;
    std::cout << (ok ? "PASS " : "FAIL ") << name << ": " << detail << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
