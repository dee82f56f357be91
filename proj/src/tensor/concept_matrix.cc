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

#include "ratex/tensor/concept_matrix.h"

#include <algorithm>
#include <set>
#include <sstream>

#include "ratex/common/errors.h"
#include "ratex/common/stats.h"

namespace ratex::tensor {

std::vector<std::string> ConceptGrid::SrcAxis() const {
  std::set<std::string> names;
  for (const auto& [key, cell] : cells) names.insert(key.src);
  return {names.begin(), names.end()};
}

std::vector<std::string> ConceptGrid::TgtAxis() const {
  std::set<std::string> names;
  for (const auto& [key, cell] : cells) names.insert(key.tgt);
  return {names.begin(), names.end()};
}

size_t ConceptGrid::TotalCount() const {
  size_t total = 0;
  for (const auto& [key, cell] : cells) total += cell.count();
  return total;
}

Json ConceptGrid::ToJson(std::string_view kind) const {
  Json doc = MakeDocument(kind);
  doc["taxonomy_id"] = taxonomy_id;
  doc["axes"] = {{"src", SrcAxis()}, {"tgt", TgtAxis()}};
  Json out = Json::array();
  for (const auto& [key, cell] : cells) {
    out.push_back({{"src", key.src},
                   {"tgt", key.tgt},
                   {"value", cell.value},
                   {"count", cell.count()},
                   {"raw", cell.raw}});
  }
  doc["cells"] = out;
  doc["meta"] = meta;
  return doc;
}

ConceptGrid ConceptGrid::FromJson(const Json& doc, std::string_view kind) {
  CheckDocument(doc, kind);
  ConceptGrid grid;
  grid.taxonomy_id = doc.at("taxonomy_id").get<std::string>();
  for (const Json& c : doc.at("cells")) {
    ConceptCell cell;
    cell.value = c.at("value").get<double>();
    cell.raw = c.at("raw").get<std::vector<double>>();
    if (cell.raw.size() != c.at("count").get<size_t>()) {
      Fail(ErrorCode::kSchemaMismatch, "cell count does not match its raw list");
    }
    grid.cells.emplace(ConceptPair{c.at("tgt").get<std::string>(), c.at("src").get<std::string>()},
                       std::move(cell));
  }
  if (doc.contains("meta")) grid.meta = doc.at("meta");
  return grid;
}

std::string FormatNumber(double value) { return Json(value).dump(); }

namespace {

std::string CsvField(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string ConceptGrid::ToCsv() const {
  const std::vector<std::string> src = SrcAxis();
  std::ostringstream out;
  out << "tgt\\src";
  for (const std::string& s : src) out << ',' << CsvField(s);
  out << '\n';
  for (const std::string& t : TgtAxis()) {
    out << CsvField(t);
    for (const std::string& s : src) {
      out << ',';
      auto it = cells.find({t, s});
      if (it != cells.end()) out << FormatNumber(it->second.value);
    }
    out << '\n';
  }
  return out.str();
}

ConceptMatrix MapPhi(const InterpretabilityMatrix& phi,
                     std::span<const concepts::LabeledToken> labels,
                     const concepts::Taxonomy& taxonomy) {
  ConceptMatrix matrix;
  matrix.taxonomy_id = taxonomy.id();
  for (const PhiCell& cell : phi.Cells()) {
    for (size_t position : {cell.src, cell.tgt}) {
      if (position >= labels.size() || labels[position].position != position) {
        Fail(ErrorCode::kMissingLabel, "no label for position " + std::to_string(position));
      }
    }
    const ConceptPair key{labels[cell.tgt].label.name, labels[cell.src].label.name};
    matrix.cells[key].raw.push_back(cell.probability);
  }
  for (auto& [key, cell] : matrix.cells) cell.value = stats::Mean(cell.raw);
  return matrix;
}

}  // namespace ratex::tensor
