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

#ifndef RATEX_ANALYTICS_JACCARD_H_
#define RATEX_ANALYTICS_JACCARD_H_

#include <cstddef>
#include <span>

namespace ratex::analytics {

// |A ∩ B| / |A ∪ B| over token positions of one snippet of `size` tokens;
// two empty sets score 1. Duplicates are ignored. Throws
// kPositionOutOfRange for positions >= size.
double JaccardAlignment(std::span<const size_t> model_rationale,
                        std::span<const size_t> human_rationale, size_t size);

}  // namespace ratex::analytics

#endif  // RATEX_ANALYTICS_JACCARD_H_
