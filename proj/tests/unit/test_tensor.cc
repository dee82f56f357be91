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

#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "ratex/common/random.h"
#include "ratex/concepts/concept_mapper.h"
#include "ratex/tensor/aggregation.h"
#include "ratex/tensor/concept_matrix.h"
#include "ratex/tensor/interpretability_matrix.h"
#include "ratex/tensor/interpretability_tensor.h"
#include "unit/test_util.h"

using namespace ratex;
using namespace ratex::tensor;
using rationale::RationaleResult;
using rationale::RationaleStep;
using testing::ErrorOf;

namespace {

concepts::Taxonomy SmallTaxonomy(const std::string& id = "small") {
  return concepts::Taxonomy::FromJson(Json{
      {"schema", 1},
      {"kind", "taxonomy"},
      {"id", id},
      {"labels", {{"a", "code"}, {"b", "code"}, {"c", "natural_language"}, {"unknown", "unknown"}}},
      {"node_map", Json::object()},
      {"pos_map", Json::object()},
      {"level_map", Json::object()},
      {"fallback", "unknown"}});
}

std::vector<concepts::LabeledToken> Labels(const concepts::Taxonomy& t,
                                           std::initializer_list<const char*> names) {
  std::vector<concepts::LabeledToken> out;
  for (const char* name : names) {
    concepts::LabeledToken token;
    token.position = out.size();
    token.text = name;
    token.label = t.Label(name);
    out.push_back(token);
  }
  return out;
}

RationaleResult Result(size_t target, std::vector<std::pair<size_t, double>> steps) {
  RationaleResult r;
  r.target_position = target;
  for (const auto& [pos, p] : steps) r.steps.push_back(RationaleStep{pos, p, 1});
  r.covered = true;
  return r;
}

double OracleMedian(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const size_t n = v.size();
  return n % 2 ? v[n / 2] : (v[n / 2 - 1] + v[n / 2]) / 2.0;
}

ConceptMatrix RandomMatrix(Rng& rng) {
  const char* names[] = {"a", "b", "c"};
  ConceptMatrix m;
  m.taxonomy_id = "small";
  for (const char* tgt : names) {
    for (const char* src : names) {
      if (rng.Bernoulli(0.4)) continue;
      ConceptCell& cell = m.cells[{tgt, src}];
      const size_t n = 1 + rng.UniformIndex(6);
      for (size_t i = 0; i < n; ++i) cell.raw.push_back(rng.Uniform01());
      double total = 0.0;
      for (double x : cell.raw) total += x;
      cell.value = total / static_cast<double>(n);
    }
  }
  return m;
}

}  // namespace

TEST_CASE("phi records the step probability of each rationale position") {
  const std::vector<RationaleResult> results = {Result(3, {{2, 0.4}, {0, 0.9}}), Result(1, {})};
  const InterpretabilityMatrix phi = InterpretabilityMatrix::Build(4, results);
  CHECK(phi.cell_count() == 2);
  CHECK(*phi.Get(2, 3) == 0.4);
  CHECK(*phi.Get(0, 3) == 0.9);
  CHECK_FALSE(phi.Get(1, 3).has_value());
  CHECK(phi.targets() == std::set<size_t>{1, 3});
  CHECK(phi.RationaleOf(3) == std::vector<size_t>{2, 0});
  CHECK(phi.RationaleOf(1).empty());
  const std::vector<PhiCell> cells = phi.Cells();
  CHECK(cells == std::vector<PhiCell>{{0, 3, 0.9}, {2, 3, 0.4}});
  const InterpretabilityMatrix back = InterpretabilityMatrix::FromJson(phi.ToJson());
  CHECK(back.Cells() == cells);
  CHECK(back.RationaleOf(3) == phi.RationaleOf(3));
  CHECK(back.targets() == phi.targets());
}

TEST_CASE("phi rejects inconsistent rationales") {
  const std::vector<RationaleResult> late = {Result(2, {{2, 0.5}})};
  CHECK(ErrorOf([&] { InterpretabilityMatrix::Build(4, late); }) == ErrorCode::kInconsistentSnippet);
  const std::vector<RationaleResult> outside = {Result(4, {})};
  CHECK(ErrorOf([&] { InterpretabilityMatrix::Build(4, outside); }) == ErrorCode::kInconsistentSnippet);
  const std::vector<RationaleResult> twice = {Result(3, {}), Result(3, {})};
  CHECK(ErrorOf([&] { InterpretabilityMatrix::Build(4, twice); }) == ErrorCode::kInconsistentSnippet);
}

TEST_CASE("concept mapping averages cells sharing a concept pair") {
  const concepts::Taxonomy t = SmallTaxonomy();
  const auto labels = Labels(t, {"a", "a", "b", "c"});
  const std::vector<RationaleResult> results = {Result(2, {{0, 0.2}, {1, 0.4}}), Result(3, {{2, 0.5}})};
  const InterpretabilityMatrix phi = InterpretabilityMatrix::Build(4, results);
  const ConceptMatrix m = MapPhi(phi, labels, t);
  CHECK(m.taxonomy_id == "small");
  const ConceptCell& ab = m.cells.at({"b", "a"});
  CHECK(ab.count() == 2);
  CHECK(std::abs(ab.value - 0.3) < 1e-12);
  CHECK(m.cells.at({"c", "b"}).value == 0.5);
  CHECK(m.TotalCount() == phi.cell_count());
  CHECK(m.SrcAxis() == std::vector<std::string>{"a", "b"});
  CHECK(m.TgtAxis() == std::vector<std::string>{"b", "c"});

  const Json doc = m.ToJson(kConceptMatrixKind);
  const ConceptMatrix back = ConceptGrid::FromJson(doc, kConceptMatrixKind);
  CHECK(back.ToJson(kConceptMatrixKind) == doc);
  CHECK(ErrorOf([&] { ConceptGrid::FromJson(doc, kTensorKind); }) == ErrorCode::kSchemaMismatch);
  CHECK(m.ToCsv() == "tgt\\src,a,b\nb," + FormatNumber(ab.value) + ",\nc,,0.5\n");

  const auto short_labels = Labels(t, {"a", "a", "b"});
  CHECK(ErrorOf([&] { MapPhi(phi, short_labels, t); }) == ErrorCode::kMissingLabel);
}

TEST_CASE("numbers format shortest round trip") {
  CHECK(FormatNumber(0.1) == "0.1");
  CHECK(FormatNumber(0.3) == "0.3");
  CHECK(FormatNumber(2.0) == "2.0");
  CHECK(FormatNumber((0.2 + 0.4) / 2) == "0.30000000000000004");
  const double third = 1.0 / 3.0;
  CHECK(std::stod(FormatNumber(third)) == third);
}

TEST_CASE("aggregation functions") {
  const std::vector<double> v = {0.4, 0.1, 0.9, 0.2};
  CHECK(Aggregate(Aggregation::kMean, v) == doctest::Approx(0.4));
  CHECK(Aggregate(Aggregation::kMedian, v) == doctest::Approx(0.3));
  CHECK(Aggregate(Aggregation::kMax, v) == 0.9);
  CHECK(Aggregate(Aggregation::kCount, v) == 4.0);
  CHECK(Aggregate(Aggregation::kSum, v) == doctest::Approx(1.6));
  CHECK(ErrorOf([] { Aggregate(Aggregation::kMean, {}); }) == ErrorCode::kEmptyInput);
  for (auto g : {Aggregation::kMean, Aggregation::kMedian, Aggregation::kMax, Aggregation::kCount,
                 Aggregation::kSum}) {
    CHECK(ParseAggregation(AggregationName(g)) == g);
  }
  CHECK(ErrorOf([] { ParseAggregation("mode"); }) == ErrorCode::kInvalidArgument);
}

TEST_CASE("reduction matches a pooled oracle") {
  for (uint64_t seed = 0; seed < 20; ++seed) {
    Rng rng(seed);
    std::vector<ConceptMatrix> matrices;
    for (int i = 0; i < 5; ++i) matrices.push_back(RandomMatrix(rng));
    std::map<ConceptPair, std::vector<double>> pooled;
    for (const ConceptMatrix& m : matrices) {
      for (const auto& [key, cell] : m.cells) {
        pooled[key].insert(pooled[key].end(), cell.raw.begin(), cell.raw.end());
      }
    }
    for (auto g : {Aggregation::kMean, Aggregation::kMedian, Aggregation::kMax, Aggregation::kCount}) {
      const InterpretabilityTensor t = Reduce(matrices, g);
      REQUIRE(t.cells.size() == pooled.size());
      CHECK(t.meta["snippet_count"] == 5);
      for (const auto& [key, values] : pooled) {
        const ConceptCell& cell = t.cells.at(key);
        double expected = 0.0;
        if (g == Aggregation::kMean) {
          for (double x : values) expected += x;
          expected /= static_cast<double>(values.size());
        } else if (g == Aggregation::kMedian) {
          expected = OracleMedian(values);
        } else if (g == Aggregation::kMax) {
          expected = *std::max_element(values.begin(), values.end());
        } else {
          expected = static_cast<double>(values.size());
        }
        CHECK(std::abs(cell.value - expected) < 1e-12);
        CHECK(cell.count() == values.size());
        CHECK(std::is_sorted(cell.raw.begin(), cell.raw.end()));
      }
    }
  }
}

TEST_CASE("reduction keeps disjoint pairs apart") {
  ConceptMatrix x;
  x.taxonomy_id = "small";
  x.cells[{"a", "b"}] = {0.2, {0.2}};
  ConceptMatrix y;
  y.taxonomy_id = "small";
  y.cells[{"c", "a"}] = {0.7, {0.7}};
  const std::vector<ConceptMatrix> both = {x, y};
  const InterpretabilityTensor t = Reduce(both, Aggregation::kMean);
  CHECK(t.cells.size() == 2);
  CHECK(t.cells.at({"a", "b"}).value == 0.2);
  CHECK(t.cells.at({"c", "a"}).value == 0.7);
  CHECK_FALSE(t.cells.count({"a", "a"}));

  y.taxonomy_id = "other";
  const std::vector<ConceptMatrix> mixed = {x, y};
  CHECK(ErrorOf([&] { Reduce(mixed, Aggregation::kMean); }) == ErrorCode::kTaxonomyMismatch);
  CHECK(ErrorOf([] { Reduce({}, Aggregation::kMean); }) == ErrorCode::kEmptyInput);
}

TEST_CASE("trial merging takes the statistic over trial values") {
  std::vector<InterpretabilityTensor> trials;
  for (double v : {0.6, 0.1, 0.2}) {
    InterpretabilityTensor t;
    t.taxonomy_id = "small";
    t.cells[{"a", "b"}] = {v, {v}};
    t.meta = {{"trial", static_cast<int>(trials.size())}, {"snippet_count", 2}};
    trials.push_back(t);
  }
  trials[1].cells[{"c", "c"}] = {0.5, {0.5, 0.5}};
  const InterpretabilityTensor merged = MergeTrials(trials, Aggregation::kMedian);
  CHECK(merged.cells.at({"a", "b"}).value == 0.2);
  CHECK(merged.cells.at({"a", "b"}).raw == std::vector<double>{0.1, 0.2, 0.6});
  CHECK(merged.cells.at({"c", "c"}).value == 0.5);
  CHECK(merged.meta["trials"] == Json::array({0, 1, 2}));
  CHECK(merged.meta["snippet_count"] == 6);

  std::vector<InterpretabilityTensor> duplicated = {trials[0], trials[0]};
  CHECK(ErrorOf([&] { MergeTrials(duplicated, Aggregation::kMedian); }) == ErrorCode::kDuplicateTrial);
  std::vector<InterpretabilityTensor> unnumbered = {trials[0]};
  unnumbered[0].meta.erase("trial");
  CHECK(ErrorOf([&] { MergeTrials(unnumbered, Aggregation::kMedian); }) == ErrorCode::kInvalidArgument);
}

TEST_CASE("trial merging matches a sorting oracle over thirty trials") {
  Rng rng(31);
  std::vector<InterpretabilityTensor> trials;
  std::vector<double> values;
  for (int k = 0; k < 30; ++k) {
    InterpretabilityTensor t;
    t.taxonomy_id = "small";
    const double v = rng.Uniform01();
    values.push_back(v);
    t.cells[{"a", "a"}] = {v, {v}};
    t.meta = {{"trial", k}};
    trials.push_back(t);
  }
  std::reverse(trials.begin(), trials.end());
  CHECK(MergeTrials(trials, Aggregation::kMedian).cells.at({"a", "a"}).value == OracleMedian(values));
  CHECK(MergeTrials(trials, Aggregation::kMax).cells.at({"a", "a"}).value ==
        *std::max_element(values.begin(), values.end()));
}
