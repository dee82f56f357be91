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

#ifndef RATEX_TENSOR_AGGREGATION_H_
#define RATEX_TENSOR_AGGREGATION_H_

#include <span>
#include <string_view>

namespace ratex::tensor {

// The reduction function g applied to pooled observations.
enum class Aggregation { kMean, kMedian, kMax, kCount, kSum };

// Throws kInvalidArgument for unknown names.
Aggregation ParseAggregation(std::string_view name);
std::string_view AggregationName(Aggregation g);

// Total over non-empty spans; throws kEmptyInput otherwise.
double Aggregate(Aggregation g, std::span<const double> values);

}  // namespace ratex::tensor

#endif  // RATEX_TENSOR_AGGREGATION_H_
