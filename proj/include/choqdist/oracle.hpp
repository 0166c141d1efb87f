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

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "choqdist/capacity.hpp"

// Ground truth that does not go through the divided-difference machinery:
// seeded simulation, literal sums, and the distinct-knot quotient formula.
namespace choqdist::oracle {

/// Counter-based generator: the SplitMix64 output function applied to
/// seed + (counter + 1) * 0x9e3779b97f4a7c15. Any counter can be drawn
/// independently, so parallel sampling is reproducible.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

  std::uint64_t bits(std::uint64_t counter) const;
  /// Uniform on [0, 1) with 53 random bits.
  double uniform(std::uint64_t counter) const;

 private:
  std::uint64_t seed_;
};

inline constexpr std::size_t kMaxSamples = 100'000'000;

struct SampleBatch {
  std::uint64_t seed = 0;
  std::vector<double> values;  // ascending
};

/// N realizations of h(X); coordinate k of draw i uses counter i * n + k.
SampleBatch sample(const Capacity& v, std::size_t count, std::uint64_t seed);

/// Kolmogorov-Smirnov distance between the batch's empirical cdf and the
/// exact cdf. Throws Error{domain} on an empty batch.
double ks_statistic(const SampleBatch& batch, const Capacity& v);

/// Asymptotic 0.1% critical value 1.95 / sqrt(N).
double ks_critical_value(std::size_t count);

/// Literal nested-subset sum for E[Y^r]; n <= 4 and r <= 3.
double brute_chain_moment(const Capacity& v, int r);

/// sum_i g(a_i) / prod_{j != i} (a_i - a_j); knots must be distinct.
double divdiff_distinct(const std::function<double(double)>& g,
                        std::span<const double> knots);

/// cdf from the quotient formula on every chain; every chain must have
/// pairwise distinct values (Error{domain} otherwise). Cancellation-prone.
double cdf_distinct_knots(const Capacity& v, double y);

}  // namespace choqdist::oracle
