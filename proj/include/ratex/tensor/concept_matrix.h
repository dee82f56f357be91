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

#ifndef RATEX_TENSOR_CONCEPT_MATRIX_H_
#define RATEX_TENSOR_CONCEPT_MATRIX_H_

#include <map>
#include <span>
#include <string>
#include <vector>

#include "ratex/common/json_io.h"
#include "ratex/concepts/concept_mapper.h"
#include "ratex/tensor/interpretability_matrix.h"

namespace ratex::tensor {

// Concept-pair key ordered by (tgt, src), the serialized axis order.
struct ConceptPair {
  std::string tgt;
  std::string src;
  friend auto operator<=>(const ConceptPair&, const ConceptPair&) = default;
};

struct ConceptCell {
  double value = 0.0;
  // Observations: phi order in a concept matrix, ascending after reduction.
  std::vector<double> raw;
  size_t count() const { return raw.size(); }
};

// A concept-level matrix or tensor: sparse cells keyed by concept pair with
// the observations that formed each cell.
struct ConceptGrid {
  std::string taxonomy_id;
  std::map<ConceptPair, ConceptCell> cells;
  Json meta = Json::object();

  // Sorted, de-duplicated concept names present on each axis.
  std::vector<std::string> SrcAxis() const;
  std::vector<std::string> TgtAxis() const;
  size_t TotalCount() const;

  // {"schema","kind","taxonomy_id","axes":{"src","tgt"},
  //  "cells":[{"src","tgt","value","count","raw"}],"meta"}
  Json ToJson(std::string_view kind) const;
  static ConceptGrid FromJson(const Json& doc, std::string_view kind);
  // Dense [tgt x src] grid of values; absent cells are empty fields.
  std::string ToCsv() const;
};

using ConceptMatrix = ConceptGrid;

inline constexpr std::string_view kConceptMatrixKind = "concept_matrix";

// Maps every phi cell onto the (label[tgt], label[src]) pair; the cell
// value is the within-cell mean and the raw list keeps each probability.
// `labels[i]` labels position i. Throws kMissingLabel when a phi position
// has no label.
ConceptMatrix MapPhi(const InterpretabilityMatrix& phi,
                     std::span<const concepts::LabeledToken> labels,
                     const concepts::Taxonomy& taxonomy);

// Shortest text that reads back as the same double.
std::string FormatNumber(double value);

}  // namespace ratex::tensor

#endif  // RATEX_TENSOR_CONCEPT_MATRIX_H_
