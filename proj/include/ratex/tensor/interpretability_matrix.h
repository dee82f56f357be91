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

#ifndef RATEX_TENSOR_INTERPRETABILITY_MATRIX_H_
#define RATEX_TENSOR_INTERPRETABILITY_MATRIX_H_

#include <map>
#include <optional>
#include <set>
#include <span>
#include <utility>

#include "ratex/common/json_io.h"
#include "ratex/rationale/rationalizer.h"

namespace ratex::tensor {

struct PhiCell {
  size_t src = 0;
  size_t tgt = 0;
  double probability = 0.0;
  friend bool operator==(const PhiCell&, const PhiCell&) = default;
};

// Sparse source -> target rationale-probability matrix of one snippet.
class InterpretabilityMatrix {
 public:
  explicit InterpretabilityMatrix(size_t size = 0) : size_(size) {}

  // Cell (src, tgt) holds the probability recorded at the step where src
  // joined tgt's rationale. Throws kInconsistentSnippet for targets outside
  // [0, size), repeated targets, or rationale positions not before their
  // target.
  static InterpretabilityMatrix Build(
      size_t size, std::span<const rationale::RationaleResult> results);

  size_t size() const { return size_; }
  size_t cell_count() const { return cells_.size(); }
  // Cells ordered by (tgt, src).
  std::vector<PhiCell> Cells() const;
  std::optional<double> Get(size_t src, size_t tgt) const;
  // Targets that were rationalized (including those with empty rationales).
  const std::set<size_t>& targets() const { return targets_; }
  // Rationale positions of `tgt` in the order they were added.
  const std::vector<size_t>& RationaleOf(size_t tgt) const;

  // {"size", "targets", "cells": [{"src","tgt","p","step"}]}
  Json ToJson() const;
  static InterpretabilityMatrix FromJson(const Json& doc);

 private:
  size_t size_;
  std::map<std::pair<size_t, size_t>, double> cells_;  // (tgt, src)
  std::set<size_t> targets_;
  std::map<size_t, std::vector<size_t>> order_;
};

}  // namespace ratex::tensor

#endif  // RATEX_TENSOR_INTERPRETABILITY_MATRIX_H_
