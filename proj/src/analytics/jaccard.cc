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

#include "ratex/analytics/jaccard.h"

#include <set>
#include <string>

#include "ratex/common/errors.h"

namespace ratex::analytics {
namespace {

std::set<size_t> ToSet(std::span<const size_t> positions, size_t size) {
  std::set<size_t> out;
  for (size_t p : positions) {
    if (p >= size) {
      Fail(ErrorCode::kPositionOutOfRange,
           "position " + std::to_string(p) + " outside snippet of size " + std::to_string(size));
    }
    out.insert(p);
  }
  return out;
}

}  // namespace

double JaccardAlignment(std::span<const size_t> model_rationale,
                        std::span<const size_t> human_rationale, size_t size) {
  const std::set<size_t> a = ToSet(model_rationale, size);
  const std::set<size_t> b = ToSet(human_rationale, size);
  if (a.empty() && b.empty()) return 1.0;
  size_t common = 0;
  for (size_t p : a) common += b.count(p);
  const size_t united = a.size() + b.size() - common;
  return static_cast<double>(common) / static_cast<double>(united);
}

}  // namespace ratex::analytics
