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

#include "ratex/analytics/frequency.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "ratex/common/stats.h"

namespace ratex::analytics {

FrequencyReport Frequency(const tensor::InterpretabilityTensor& tensor, ConceptSide side) {
  std::map<std::string, std::vector<double>> pooled;
  for (const auto& [key, cell] : tensor.cells) {
    std::vector<double>& values = pooled[side == ConceptSide::kSource ? key.src : key.tgt];
    values.insert(values.end(), cell.raw.begin(), cell.raw.end());
  }
  FrequencyReport report;
  report.side = side;
  for (const auto& [name, values] : pooled) report.total += values.size();
  for (const auto& [name, values] : pooled) {
    if (values.empty()) continue;
    FrequencyRecord r;
    r.concept_name = name;
    r.frequency = values.size();
    r.mean = stats::Mean(values);
    r.std = stats::StdDev(values);
    r.proportion = static_cast<double>(r.frequency) / static_cast<double>(report.total);
    r.weight = std::log10(static_cast<double>(r.frequency) + 1.0);
    report.records.push_back(std::move(r));
  }
  std::stable_sort(report.records.begin(), report.records.end(),
                   [](const FrequencyRecord& a, const FrequencyRecord& b) {
                     return a.frequency > b.frequency;
                   });
  return report;
}

Json FrequencyReport::ToJson() const {
  Json doc = MakeDocument("frequency");
  doc["side"] = side == ConceptSide::kSource ? "src" : "tgt";
  doc["total"] = total;
  Json out = Json::array();
  for (const FrequencyRecord& r : records) {
    out.push_back({{"concept", r.concept_name},
                   {"frequency", r.frequency},
                   {"mean", r.mean},
                   {"std", r.std},
                   {"proportion", r.proportion},
                   {"weight", r.weight}});
  }
  doc["records"] = out;
  return doc;
}

std::string FrequencyReport::ToCsv() const {
  std::ostringstream out;
  out << "concept,frequency,mean,std,proportion,weight\n";
  for (const FrequencyRecord& r : records) {
    out << r.concept_name << ',' << r.frequency << ',' << tensor::FormatNumber(r.mean) << ','
        << tensor::FormatNumber(r.std) << ',' << tensor::FormatNumber(r.proportion) << ','
        << tensor::FormatNumber(r.weight) << '\n';
  }
  return out.str();
}

}  // namespace ratex::analytics
