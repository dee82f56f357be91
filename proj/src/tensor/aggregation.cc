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

#include "ratex/tensor/aggregation.h"

#include <string>

#include "ratex/common/errors.h"
#include "ratex/common/stats.h"

namespace ratex::tensor {

Aggregation ParseAggregation(std::string_view name) {
  if (name == "mean") return Aggregation::kMean;
  if (name == "median") return Aggregation::kMedian;
  if (name == "max") return Aggregation::kMax;
  if (name == "count") return Aggregation::kCount;
  if (name == "sum") return Aggregation::kSum;
  Fail(ErrorCode::kInvalidArgument, "unknown aggregation '" + std::string(name) + "'");
}

std::string_view AggregationName(Aggregation g) {
  switch (g) {
    case Aggregation::kMean:
      return "mean";
    case Aggregation::kMedian:
      return "median";
    case Aggregation::kMax:
      return "max";
    case Aggregation::kCount:
      return "count";
    case Aggregation::kSum:
      break;
  }
  return "sum";
}

double Aggregate(Aggregation g, std::span<const double> values) {
  if (values.empty()) Fail(ErrorCode::kEmptyInput, "aggregation over no values");
  switch (g) {
    case Aggregation::kMean:
      return stats::Mean(values);
    case Aggregation::kMedian:
      return stats::Median(values);
    case Aggregation::kMax:
      return stats::Max(values);
    case Aggregation::kCount:
      return static_cast<double>(values.size());
    case Aggregation::kSum:
      break;
  }
  return stats::Sum(values);
}

}  // namespace ratex::tensor
