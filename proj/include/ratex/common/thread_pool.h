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

#ifndef RATEX_COMMON_THREAD_POOL_H_
#define RATEX_COMMON_THREAD_POOL_H_

#include <cstddef>
#include <functional>

namespace ratex {

// Runs body(i) for i in [0, count) on up to `jobs` threads. Items are
// independent; the first exception thrown by any item is rethrown after all
// workers stop. jobs == 0 means hardware concurrency.
void ParallelFor(size_t count, size_t jobs,
                 const std::function<void(size_t)>& body);

size_t DefaultJobs();

}  // namespace ratex

#endif  // RATEX_COMMON_THREAD_POOL_H_
