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

#include "ratex/analytics/density.h"

#include <algorithm>
#include <map>
#include <sstream>

#include "ratex/common/errors.h"
#include "ratex/common/stats.h"

namespace ratex::analytics {

DensityReport Density(std::span<const LabeledTensor> tensors, size_t bins, ConceptSide side) {
  if (bins == 0) Fail(ErrorCode::kInvalidArgument, "histogram needs at least one bin");
  std::map<std::pair<std::string, std::string>, std::vector<double>> pooled;
  for (const LabeledTensor& lt : tensors) {
    for (const auto& [key, cell] : lt.tensor->cells) {
      auto& values = pooled[{side == ConceptSide::kSource ? key.src : key.tgt, lt.testbed}];
      values.insert(values.end(), cell.raw.begin(), cell.raw.end());
    }
  }
  DensityReport report;
  report.bins = bins;
  for (const auto& [key, values] : pooled) {
    if (values.empty()) continue;
    DensityEntry e;
    e.concept_name = key.first;
    e.testbed = key.second;
    e.count = values.size();
    e.histogram.assign(bins, 0);
    for (double v : values) {
      const double clamped = std::clamp(v, 0.0, 1.0);
      const size_t bin = std::min(bins - 1, static_cast<size_t>(clamped * static_cast<double>(bins)));
      ++e.histogram[bin];
    }
    e.p25 = stats::Quantile(values, 0.25);
    e.p50 = stats::Quantile(values, 0.50);
    e.p75 = stats::Quantile(values, 0.75);
    e.max = stats::Max(values);
    report.entries.push_back(std::move(e));
  }
  return report;
}

Json DensityReport::ToJson() const {
  Json doc = MakeDocument("density");
  doc["bins"] = bins;
  Json out = Json::array();
  for (const DensityEntry& e : entries) {
    out.push_back({{"concept", e.concept_name},
                   {"testbed", e.testbed},
                   {"count", e.count},
                   {"histogram", e.histogram},
                   {"p25", e.p25},
                   {"p50", e.p50},
                   {"p75", e.p75},
                   {"max", e.max}});
  }
  doc["entries"] = out;
  // Reference levels drawn as guide lines next to the densities.
  doc["reference_lines"] = {{"p75", 0.05}, {"max", 0.079}};
  return doc;
}

std::string DensityReport::ToCsv() const {
  std::ostringstream out;
  out << "concept,testbed,count,p25,p50,p75,max\n";
  for (const DensityEntry& e : entries) {
    out << e.concept_name << ',' << e.testbed << ',' << e.count << ','
        << tensor::FormatNumber(e.p25) << ',' << tensor::FormatNumber(e.p50) << ','
        << tensor::FormatNumber(e.p75) << ',' << tensor::FormatNumber(e.max) << '\n';
  }
  return out.str();
}

}  // namespace ratex::analytics
