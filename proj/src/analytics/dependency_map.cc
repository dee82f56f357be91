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

#include "ratex/analytics/dependency_map.h"

#include <map>
#include <sstream>

#include "ratex/common/errors.h"
#include "ratex/tensor/concept_matrix.h"

namespace ratex::analytics {
namespace {

DependencyNode MakeNode(std::span<const concepts::LabeledToken> labels, size_t position) {
  if (position >= labels.size() || labels[position].position != position) {
    Fail(ErrorCode::kMissingLabel, "no label for position " + std::to_string(position));
  }
  const concepts::LabeledToken& token = labels[position];
  DependencyNode node;
  node.position = position;
  node.text = token.text;
  node.concept_name = token.label.name;
  node.modality = token.label.modality == concepts::Modality::kNaturalLanguage
                      ? "natural_language"
                      : "code";
  return node;
}

Json NodeJson(const DependencyNode& n) {
  return {{"pos", n.position}, {"text", n.text}, {"concept", n.concept_name}, {"modality", n.modality}};
}

std::string DotEscape(std::string_view text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '"':
        out += "\\\"";
        break;
      case '\\':
        out += "\\\\";
        break;
      case '\n':
        out += "\\\\n";
        break;
      case '\t':
        out += "\\\\t";
        break;
      case '\r':
        out += "\\\\r";
        break;
      default:
        out += c;
    }
  }
  return out;
}

}  // namespace

DependencyMap BuildDependencyMap(std::span<const concepts::LabeledToken> labels,
                                 const tensor::InterpretabilityMatrix& phi, size_t target) {
  if (!phi.targets().count(target)) {
    Fail(ErrorCode::kNoRationale, "position " + std::to_string(target) + " has no rationale");
  }
  DependencyMap map;
  map.target = MakeNode(labels, target);
  const std::vector<size_t>& order = phi.RationaleOf(target);
  for (size_t step = 0; step < order.size(); ++step) {
    DependencyNode node = MakeNode(labels, order[step]);
    node.weight = *phi.Get(order[step], target);
    node.step = step;
    map.rationale.push_back(std::move(node));
  }
  return map;
}

Json DependencyMap::ToJson() const {
  Json doc = MakeDocument("dependency_map");
  doc["target"] = NodeJson(target);
  Json l1 = Json::array();
  Json edges = Json::array();
  std::map<std::string, std::pair<std::string, Json>> l2;
  std::map<std::string, Json> l3;
  for (const DependencyNode& n : rationale) {
    Json node = NodeJson(n);
    node["weight"] = n.weight;
    node["step"] = n.step;
    l1.push_back(node);
    edges.push_back({{"src", n.position}, {"tgt", target.position}, {"weight", n.weight}});
    auto& [modality, positions] = l2[n.concept_name];
    modality = n.modality;
    positions.push_back(n.position);
  }
  Json l2_out = Json::array();
  for (const auto& [name, entry] : l2) {
    l2_out.push_back({{"concept", name}, {"modality", entry.first}, {"positions", entry.second}});
    l3[entry.first].push_back(name);
  }
  Json l3_out = Json::array();
  for (const auto& [modality, concepts] : l3) {
    l3_out.push_back({{"modality", modality}, {"concepts", concepts}});
  }
  doc["L1"] = l1;
  doc["L2"] = l2_out;
  doc["L3"] = l3_out;
  doc["edges"] = edges;
  return doc;
}

std::string DependencyMap::ToDot() const {
  std::map<std::string, std::map<std::string, std::vector<const DependencyNode*>>> groups;
  for (const DependencyNode& n : rationale) groups[n.modality][n.concept_name].push_back(&n);
  std::ostringstream out;
  out << "digraph dependency_map {\n  rankdir=LR;\n  node [shape=box];\n";
  for (const auto& [modality, concepts] : groups) {
    out << "  subgraph \"cluster_" << modality << "\" {\n    label=\"" << modality << "\";\n";
    for (const auto& [name, nodes] : concepts) {
      out << "    subgraph \"cluster_" << modality << "_" << DotEscape(name)
          << "\" {\n      label=\"" << DotEscape(name) << "\";\n";
      for (const DependencyNode* n : nodes) {
        out << "      t" << n->position << " [label=\"" << n->position << ": "
            << DotEscape(n->text) << "\"];\n";
      }
      out << "    }\n";
    }
    out << "  }\n";
  }
  out << "  t" << target.position << " [label=\"" << target.position << ": "
      << DotEscape(target.text) << "\\n[" << DotEscape(target.concept_name) << "]\", style=bold];\n";
  for (const DependencyNode& n : rationale) {
    out << "  t" << n.position << " -> t" << target.position << " [label=\""
        << tensor::FormatNumber(n.weight) << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace ratex::analytics
