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
#include <atomic>
#include <cmath>
#include <numeric>
#include <set>

#include "doctest.h"
#include "ratex/common/errors.h"
#include "ratex/common/json_io.h"
#include "ratex/common/random.h"
#include "ratex/common/stats.h"
#include "ratex/common/thread_pool.h"
#include "unit/test_util.h"

using namespace ratex;
using testing::ErrorOf;

TEST_CASE("median takes the midpoint of the central pair") {
  const std::vector<double> odd = {0.5, 0.1, 0.3};
  const std::vector<double> even = {0.04, 0.01, 0.03, 0.02};
  CHECK(stats::Median(odd) == 0.3);
  CHECK(stats::Median(even) == doctest::Approx(0.025).epsilon(1e-15));
}

TEST_CASE("quantiles interpolate between closest ranks") {
  const std::vector<double> v = {4.0, 1.0, 3.0, 2.0};
  CHECK(stats::Quantile(v, 0.0) == 1.0);
  CHECK(stats::Quantile(v, 1.0) == 4.0);
  CHECK(stats::Quantile(v, 0.5) == 2.5);
  CHECK(stats::Quantile(v, 0.25) == doctest::Approx(1.75));
}

TEST_CASE("population standard deviation") {
  const std::vector<double> same = {0.06, 0.06};
  CHECK(stats::StdDev(same) == 0.0);
  const std::vector<double> v = {2, 4, 4, 4, 5, 5, 7, 9};
  CHECK(stats::StdDev(v) == doctest::Approx(2.0));
  CHECK(stats::Mean(v) == 5.0);
}

TEST_CASE("statistics reject empty input") {
  const std::vector<double> empty;
  CHECK(ErrorOf([&] { stats::Mean(empty); }) == ErrorCode::kEmptyInput);
  CHECK(ErrorOf([&] { stats::Median(empty); }) == ErrorCode::kEmptyInput);
  CHECK(ErrorOf([&] { stats::Quantile(empty, 0.5); }) == ErrorCode::kEmptyInput);
  CHECK(stats::Sum(empty) == 0.0);
}

TEST_CASE("sums do not depend on input order") {
  std::vector<double> v;
  Rng rng(3);
  for (int i = 0; i < 1000; ++i) v.push_back(rng.Uniform01() * std::pow(10.0, i % 7));
  const double forward = stats::Sum(v);
  std::reverse(v.begin(), v.end());
  CHECK(stats::Sum(v) == forward);
  std::rotate(v.begin(), v.begin() + 317, v.end());
  CHECK(stats::Mean(v) == forward / 1000.0);
}

TEST_CASE("derived seeds are stable and path sensitive") {
  CHECK(DeriveSeed(7, {1, 2}) == DeriveSeed(7, {1, 2}));
  CHECK(DeriveSeed(7, {1, 2}) != DeriveSeed(7, {2, 1}));
  CHECK(DeriveSeed(7, {1}) != DeriveSeed(8, {1}));
  CHECK(DeriveSeed(7, {}) != DeriveSeed(7, {0}));
  CHECK(HashString("") == 0xcbf29ce484222325ULL);
  CHECK(HashString("a") == 0xaf63dc4c8601ec8cULL);
}

TEST_CASE("rng draws stay in range and replay") {
  Rng a(42);
  Rng b(42);
  std::set<int64_t> seen;
  for (int i = 0; i < 2000; ++i) {
    const int64_t x = a.UniformInt(2, 6);
    CHECK(x == b.UniformInt(2, 6));
    CHECK(x >= 2);
    CHECK(x <= 6);
    seen.insert(x);
    const double u = a.Uniform01();
    CHECK(u == b.Uniform01());
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
  }
  CHECK(seen.size() == 5);
}

TEST_CASE("documents carry schema and kind") {
  const Json doc = MakeDocument("thing");
  CHECK(doc["schema"] == kSchemaVersion);
  CHECK(doc["kind"] == "thing");
  CHECK_NOTHROW(CheckDocument(doc, "thing"));
  CHECK(ErrorOf([&] { CheckDocument(doc, "other"); }) == ErrorCode::kSchemaMismatch);
  Json future = doc;
  future["schema"] = kSchemaVersion + 1;
  CHECK(ErrorOf([&] { CheckDocument(future, "thing"); }) == ErrorCode::kSchemaMismatch);
  CHECK(ErrorOf([&] { CheckDocument(Json::array(), "thing"); }) == ErrorCode::kSchemaMismatch);
}

TEST_CASE("json files round trip byte for byte") {
  testing::ScratchDir dir;
  Json doc = MakeDocument("thing");
  doc["values"] = {0.1, 1e-300, 3.0};
  WriteJsonFile(dir / "a/b.json", doc);
  const Json back = ReadJsonFile(dir / "a/b.json");
  CHECK(back == doc);
  WriteJsonFile(dir / "c.json", back);
  CHECK(ReadTextFile(dir / "a/b.json") == ReadTextFile(dir / "c.json"));
  CHECK(ReadTextFile(dir / "c.json").back() == '\n');
  CHECK(ErrorOf([&] { ReadTextFile(dir / "missing.json"); }) == ErrorCode::kIoError);
  WriteTextFile(dir / "bad.json", "{");
  CHECK(ErrorOf([&] { ReadJsonFile(dir / "bad.json"); }) == ErrorCode::kIoError);
}

TEST_CASE("parallel for visits every item once for any job count") {
  for (size_t jobs : {size_t{1}, size_t{3}, size_t{0}}) {
    std::vector<std::atomic<int>> hits(257);
    ParallelFor(hits.size(), jobs, [&](size_t i) { hits[i]++; });
    CHECK(std::all_of(hits.begin(), hits.end(), [](const auto& h) { return h == 1; }));
  }
  CHECK_THROWS_AS(ParallelFor(10, 2, [](size_t i) {
                    if (i == 5) Fail(ErrorCode::kInvalidArgument, "boom");
                  }),
                  Error);
}
