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

#include "choqdist/capacity.hpp"

namespace choqdist {

/// Lovász extension of v at x in [0,1]^n via the telescoping sum over the
/// simplex containing x. Ties are broken by ascending player index.
double eval_sorted(const Capacity& v, std::span<const double> x);

/// Same function through the Moebius expansion sum_A m(A) min_{i in A} x_i.
/// Coefficients with magnitude below 1e-15 are skipped.
double eval_moebius(const MoebiusRepresentation& m, std::span<const double> x);

}  // namespace choqdist
