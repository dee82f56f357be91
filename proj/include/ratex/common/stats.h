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

#ifndef RATEX_COMMON_STATS_H_
#define RATEX_COMMON_STATS_H_

#include <span>
#include <vector>

namespace ratex::stats {

// All functions take unsorted input and are total over non-empty spans.
// Sums are accumulated over the sorted values so results do not depend on
// input order.

double Mean(std::span<const double> values);
double Sum(std::span<const double> values);
double Max(std::span<const double> values);
// Even-length lists use the midpoint of the central pair.
double Median(std::span<const double> values);
// Population standard deviation.
double StdDev(std::span<const double> values);
// Linear interpolation between closest ranks, q in [0, 1].
double Quantile(std::span<const double> values, double q);

std::vector<double> Sorted(std::span<const double> values);

}  // namespace ratex::stats

#endif  // RATEX_COMMON_STATS_H_
