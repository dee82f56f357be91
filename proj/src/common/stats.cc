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

#include "ratex/common/stats.h"

#include <algorithm>
#include <cmath>

#include "ratex/common/errors.h"

namespace ratex::stats {
namespace {

void RequireNonEmpty(std::span<const double> values, const char* what) {
  if (values.empty()) {
    Fail(ErrorCode::kEmptyInput, std::string(what) + " of an empty list");
  }
}

double SortedSum(const std::vector<double>& sorted) {
  double total = 0.0;
  for (double v : sorted) total += v;
  return total;
}

}  // namespace

std::vector<double> Sorted(std::span<const double> values) {
  std::vector<double> out(values.begin(), values.end());
  std::sort(out.begin(), out.end());
  return out;
}

double Sum(std::span<const double> values) {
  return SortedSum(Sorted(values));
}

double Mean(std::span<const double> values) {
  RequireNonEmpty(values, "mean");
  return Sum(values) / static_cast<double>(values.size());
}

double Max(std::span<const double> values) {
  RequireNonEmpty(values, "max");
  return *std::max_element(values.begin(), values.end());
}

double Median(std::span<const double> values) {
  RequireNonEmpty(values, "median");
  const std::vector<double> sorted = Sorted(values);
  const size_t n = sorted.size();
  if (n % 2 == 1) return sorted[n / 2];
  return (sorted[n / 2 - 1] + sorted[n / 2]) / 2.0;
}

double StdDev(std::span<const double> values) {
  RequireNonEmpty(values, "standard deviation");
  const std::vector<double> sorted = Sorted(values);
  const double mean = SortedSum(sorted) / static_cast<double>(sorted.size());
  double acc = 0.0;
  for (double v : sorted) acc += (v - mean) * (v - mean);
  return std::sqrt(acc / static_cast<double>(sorted.size()));
}

double Quantile(std::span<const double> values, double q) {
  RequireNonEmpty(values, "quantile");
  const std::vector<double> sorted = Sorted(values);
  const double h = q * static_cast<double>(sorted.size() - 1);
  const size_t lo = static_cast<size_t>(std::floor(h));
  const size_t hi = std::min(lo + 1, sorted.size() - 1);
  return sorted[lo] + (h - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]);
}

}  // namespace ratex::stats
