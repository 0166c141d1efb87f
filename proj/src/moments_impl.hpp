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

#include <vector>

#include "choqdist/capacity.hpp"

namespace choqdist::detail {

/// E[Y^1..Y^order] from one pass of the down-set recursion.
std::vector<double> raw_moments_upto(const Capacity& v, int order);

/// Binomial coefficient as a double, exact for the sizes used here.
double binomial(int n, int k);

}  // namespace choqdist::detail
