// Copyright 2026 The ExcitEQ Developers
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

#pragma once

#include <functional>

namespace exciteq {

/// Worker cap: EXCITEQ_THREADS when set (clamped to >= 1), otherwise the
/// hardware concurrency.
int thread_cap();

/// Runs fn(i) for i in [0, n) over contiguous per-thread slices. Callers
/// must write to disjoint locations; results are identical for any thread
/// count.
void parallel_for(int n, const std::function<void(int)>& fn);

}  // namespace exciteq
