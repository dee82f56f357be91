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

#include <set>

#include "doctest.h"
#include "ratex/model/lookup_model.h"
#include "ratex/rationale/brute_force.h"
#include "ratex/rationale/rationale_io.h"
#include "ratex/rationale/rationalizer.h"
#include "unit/lookup_instances.h"
#include "unit/test_util.h"

using namespace ratex;
using namespace ratex::model;
using namespace ratex::rationale;
using testing::ErrorOf;
using testing::Peaked;

namespace {

// Five tokens a b c d | t: target t at position 4 is the argmax only when
// positions 0 and 2 are both in the context.
struct JointModel {
  LookupModel model{Vocabulary({"a", "b", "c", "d", "t", "o"})};
  std::vector<VocabId> seq = {{0}, {1}, {2}, {3}, {4}};

  JointModel() {
    model.SetDefault(Peaked(6, 5, 0.5));
    // {0} alone raises P(t) without covering, so greedy starts there.
    model.Set(ContextSubset({{0, {0}}}, 4), {0.1, 0.1, 0.1, 0.1, 0.2, 0.4});
    model.Set(ContextSubset({{0, {0}}, {2, {2}}}, 4), Peaked(6, 4, 0.7));
    model.Set(ContextSubset({{0, {0}}, {1, {1}}, {2, {2}}}, 4), Peaked(6, 4, 0.7));
    model.Set(ContextSubset({{0, {0}}, {2, {2}}, {3, {3}}}, 4), Peaked(6, 4, 0.7));
    model.Set(ContextSubset({{0, {0}}, {1, {1}}, {2, {2}}, {3, {3}}}, 4), Peaked(6, 4, 0.7));
  }
};

}  // namespace

TEST_CASE("empty rationale when the target is already the argmax") {
  LookupModel m(Vocabulary({"a", "b"}));
  m.SetDefault({0.3, 0.7});
  const std::vector<VocabId> seq = {{0}, {1}};
  const RationaleResult r = RationalizeToken(m, seq, 1);
  CHECK(r.covered);
  CHECK(r.steps.empty());
  CHECK(r.evaluations_used == 1);
}

TEST_CASE("greedy finds a jointly covering pair confirmed by exhaustive search") {
  JointModel j;
  const RationaleResult r = RationalizeToken(j.model, j.seq, 4);
  CHECK(r.covered);
  CHECK(r.Positions() == std::vector<size_t>{0, 2});
  CHECK(r.steps[0].probability_of_target == 0.2);
  CHECK(r.steps[0].rank_of_target == 2);
  CHECK(r.steps[1].probability_of_target == 0.7);
  CHECK(r.steps[1].rank_of_target == 1);

  const auto minimal = BruteForceRationale(j.model, j.seq, 4);
  CHECK(minimal == std::vector<std::vector<size_t>>{{0, 2}});
  // Greedy's set covers on its own.
  const auto dist = j.model.Evaluate(ContextSubset::Select(j.seq, r.Positions(), 4));
  CHECK(dist.ArgMax() == j.seq[4]);
}

TEST_CASE("exhaustion when nothing covers") {
  LookupModel m(Vocabulary({"a", "b", "c"}));
  m.SetDefault({0.6, 0.1, 0.3});
  const std::vector<VocabId> seq = {{0}, {1}, {0}, {2}, {1}};
  const RationaleResult r = RationalizeToken(m, seq, 4);
  CHECK_FALSE(r.covered);
  CHECK(r.steps.size() == 4);
  const std::vector<size_t> order = r.Positions();
  const std::set<size_t> positions(order.begin(), order.end());
  CHECK(positions == std::set<size_t>{0, 1, 2, 3});
  // Equal probabilities everywhere: the lowest position wins every step.
  CHECK(r.Positions() == std::vector<size_t>{0, 1, 2, 3});
  CHECK(r.evaluations_used == ExpectedEvaluations(4, 4));
  CHECK(BruteForceRationale(m, seq, 4).empty());
}

TEST_CASE("call-count closed form") {
  CHECK(ExpectedEvaluations(7, 0) == 1);
  CHECK(ExpectedEvaluations(5, 2) == 3 + 5 + 4);
  CHECK(ExpectedEvaluations(4, 4) == 5 + 4 + 3 + 2 + 1);
  for (uint64_t seed = 0; seed < 40; ++seed) {
    const testing::LookupInstance inst = testing::RandomLookupInstance(seed);
    CountingModel counter(*inst.model);
    const RationaleResult r = RationalizeToken(counter, inst.sequence, inst.target);
    CHECK(counter.evaluations() == r.evaluations_used);
    CHECK(r.evaluations_used == ExpectedEvaluations(inst.target, r.steps.size()));
  }
}

TEST_CASE("snippet rationalization composes single targets") {
  const testing::LookupInstance inst = testing::RandomLookupInstance(3, 8);
  const size_t n = inst.sequence.size();
  const std::vector<size_t> none;
  CHECK(RationalizeSnippet(*inst.model, inst.sequence, none).empty());
  const std::vector<size_t> targets = GeneratedTargets(n - 2, n);
  REQUIRE(targets.size() == 2);
  const auto results = RationalizeSnippet(*inst.model, inst.sequence, targets, {}, 2);
  CHECK(results[0] == RationalizeToken(*inst.model, inst.sequence, targets[0]));
  CHECK(results[1] == RationalizeToken(*inst.model, inst.sequence, targets[1]));
  CHECK(GeneratedTargets(0, 3) == std::vector<size_t>{1, 2});
  CHECK(GeneratedTargets(3, 3).empty());
}

TEST_CASE("results do not depend on the worker count") {
  const testing::LookupInstance inst = testing::RandomLookupInstance(17, 8);
  std::vector<size_t> targets;
  for (size_t t = 1; t < inst.sequence.size(); ++t) targets.push_back(t);
  RationalizeOptions options;
  options.tie_break_seed = 99;
  const auto one = RationalizeSnippet(*inst.model, inst.sequence, targets, options, 1);
  const auto many = RationalizeSnippet(*inst.model, inst.sequence, targets, options, 4);
  CHECK(one == many);
}

TEST_CASE("seeded tie-breaking permutes equal candidates") {
  // Every subset has the same distribution until the full context.
  LookupModel m(Vocabulary({"a", "b"}));
  m.SetDefault({0.6, 0.4});
  std::vector<VocabId> seq(7, VocabId{0});
  seq[6] = VocabId{1};
  std::vector<size_t> all = {0, 1, 2, 3, 4, 5};
  m.Set(ContextSubset::Select(seq, all, 6), {0.2, 0.8});
  std::set<std::vector<size_t>> orders;
  for (uint64_t seed = 0; seed < 12; ++seed) {
    RationalizeOptions options;
    options.tie_break_seed = seed;
    const RationaleResult a = RationalizeToken(m, seq, 6, options);
    CHECK(a == RationalizeToken(m, seq, 6, options));
    CHECK(a.covered);
    CHECK(a.steps.size() == 6);
    orders.insert(a.Positions());
  }
  CHECK(orders.size() > 1);
  CHECK(RationalizeToken(m, seq, 6).Positions() == all);
}

TEST_CASE("target positions are validated") {
  LookupModel m(Vocabulary({"a", "b"}));
  const std::vector<VocabId> seq = {{0}, {1}};
  CHECK(ErrorOf([&] { RationalizeToken(m, seq, 0); }) == ErrorCode::kTargetOutOfRange);
  CHECK(ErrorOf([&] { RationalizeToken(m, seq, 2); }) == ErrorCode::kTargetOutOfRange);
  const std::vector<VocabId> long_seq(20, VocabId{0});
  CHECK(ErrorOf([&] { BruteForceRationale(m, long_seq, 17); }) == ErrorCode::kContextTooLarge);
  CHECK(ErrorOf([&] { BruteForceRationale(m, long_seq, 3, 17); }) == ErrorCode::kContextTooLarge);
}

TEST_CASE("exhaustive search cases") {
  LookupModel single(Vocabulary({"a", "b", "t"}));
  single.SetDefault({0.5, 0.3, 0.2});
  const std::vector<VocabId> seq = {{0}, {1}, {0}, {2}};
  single.Set(ContextSubset({{1, {1}}}, 3), {0.1, 0.1, 0.8});
  CHECK(BruteForceRationale(single, seq, 3) == std::vector<std::vector<size_t>>{{1}});

  LookupModel uniform(Vocabulary({"a", "b", "c"}));
  CHECK(BruteForceRationale(uniform, seq, 3).empty());
  const std::vector<VocabId> lowest = {{1}, {2}, {0}};
  CHECK(BruteForceRationale(uniform, lowest, 2) == std::vector<std::vector<size_t>>{{}});
}

TEST_CASE("greedy is never smaller than the exhaustive minimum") {
  for (uint64_t seed = 100; seed < 130; ++seed) {
    const testing::LookupInstance inst = testing::RandomLookupInstance(seed);
    const RationaleResult greedy = RationalizeToken(*inst.model, inst.sequence, inst.target);
    const auto minimal = BruteForceRationale(*inst.model, inst.sequence, inst.target);
    REQUIRE_FALSE(minimal.empty());
    CHECK(greedy.covered);
    CHECK(minimal.front().size() <= greedy.steps.size());
  }
}

TEST_CASE("rationale results serialize losslessly") {
  JointModel j;
  const RationaleResult r = RationalizeToken(j.model, j.seq, 4);
  CHECK(RationaleFromJson(ToJson(r)) == r);
  const std::vector<RationaleResult> both = {r, RationalizeToken(j.model, j.seq, 3)};
  CHECK(RationalesFromJson(ToJson(both)) == both);
  const Json doc = ToJson(r);
  CHECK(doc["target_pos"] == 4);
  CHECK(doc["steps"].size() == 2);
  CHECK(doc["evals"] == r.evaluations_used);
}
