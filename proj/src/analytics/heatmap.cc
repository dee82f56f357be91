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

#include "ratex/analytics/heatmap.h"

#include <algorithm>
#include <set>
#include <sstream>

#include "ratex/common/errors.h"
#include "ratex/common/random.h"
#include "ratex/common/stats.h"

namespace ratex::analytics {

HeatmapReport Heatmap(std::span<const InterpretabilityTensor> trials,
                      const HeatmapOptions& options) {
  if (trials.empty()) Fail(ErrorCode::kEmptyInput, "heatmap needs at least one trial");
  if (options.min_values == 0 || options.replicates == 0) {
    Fail(ErrorCode::kInvalidArgument, "bootstrap sizes must be positive");
  }
  std::map<ConceptPair, std::vector<double>> trial_values;
  std::map<ConceptPair, std::vector<double>> pooled;
  std::set<std::string> tgt_axis;
  std::set<std::string> src_axis;
  for (const InterpretabilityTensor& t : trials) {
    for (const auto& [key, cell] : t.cells) {
      trial_values[key].push_back(cell.value);
      std::vector<double>& raw = pooled[key];
      raw.insert(raw.end(), cell.raw.begin(), cell.raw.end());
      tgt_axis.insert(key.tgt);
      src_axis.insert(key.src);
    }
  }

  HeatmapReport report;
  report.tgt_axis.assign(tgt_axis.begin(), tgt_axis.end());
  report.src_axis.assign(src_axis.begin(), src_axis.end());
  const double tail = (1.0 - options.confidence) / 2.0;
  std::map<std::string, std::vector<double>> rows;
  for (auto& [key, raw] : pooled) {
    // Sorting first makes resampling independent of trial order.
    std::sort(raw.begin(), raw.end());
    HeatmapCell cell;
    cell.median = stats::Median(trial_values.at(key));
    cell.trials = trial_values.at(key).size();
    cell.observations = raw.size();
    std::vector<double>& row = rows[key.tgt];
    row.insert(row.end(), raw.begin(), raw.end());
    if (raw.empty()) {
      Fail(ErrorCode::kInvalidArgument,
           "cell " + key.tgt + "/" + key.src + " carries no raw observations");
    }
    Rng rng(DeriveSeed(options.seed, {HashString(key.tgt), HashString(key.src)}));
    std::vector<double> values = raw;
    while (values.size() < options.min_values) values.push_back(raw[rng.UniformIndex(raw.size())]);
    cell.values = values.size();
    std::vector<double> medians(options.replicates);
    std::vector<double> resample(values.size());
    for (double& m : medians) {
      for (double& v : resample) v = values[rng.UniformIndex(values.size())];
      m = stats::Median(resample);
    }
    cell.ci_low = stats::Quantile(medians, tail);
    cell.ci_high = stats::Quantile(medians, 1.0 - tail);
    report.cells.emplace(key, cell);
  }
  for (const auto& [tgt, values] : rows) {
    if (!values.empty()) report.row_medians[tgt] = stats::Median(values);
  }
  return report;
}

Json HeatmapReport::ToJson() const {
  Json doc = MakeDocument("heatmap");
  doc["axes"] = {{"tgt", tgt_axis}, {"src", src_axis}};
  Json out = Json::array();
  for (const auto& [key, cell] : cells) {
    out.push_back({{"tgt", key.tgt},
                   {"src", key.src},
                   {"median", cell.median},
                   {"trials", cell.trials},
                   {"observations", cell.observations},
                   {"bootstrap_values", cell.values},
                   {"ci", {cell.ci_low, cell.ci_high}}});
  }
  doc["cells"] = out;
  doc["row_medians"] = row_medians;
  return doc;
}

std::string HeatmapReport::ToCsv() const {
  std::ostringstream out;
  out << "tgt\\src";
  for (const std::string& s : src_axis) out << ',' << s;
  out << '\n';
  for (const std::string& t : tgt_axis) {
    out << t;
    for (const std::string& s : src_axis) {
      out << ',';
      auto it = cells.find({t, s});
      if (it != cells.end()) out << tensor::FormatNumber(it->second.median);
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace ratex::analytics
