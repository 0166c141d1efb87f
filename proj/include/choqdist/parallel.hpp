// Copyright 2026 The choqdist Authors.
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

#include <span>

namespace choqdist {

/// Number of worker threads used by the parallel kernels. Results do not
/// depend on this setting: reductions run over a fixed block decomposition
/// in a fixed order.
void set_thread_count(int threads);
int thread_count();

/// Pairwise (cascade) sum in index order.
double pairwise_sum(std::span<const double> values);

}  // namespace choqdist
