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

#include "choqdist/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "choqdist/distribution.hpp"
#include "choqdist/error.hpp"
#include "choqdist/lovasz.hpp"
#include "moments_impl.hpp"

namespace choqdist::oracle {

std::uint64_t CounterRng::bits(std::uint64_t counter) const {
  std::uint64_t z = seed_ + (counter + 1) * 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double CounterRng::uniform(std::uint64_t counter) const {
  return static_cast<double>(bits(counter) >> 11) * 0x1.0p-53;
}

SampleBatch sample(const Capacity& v, std::size_t count, std::uint64_t seed) {
  if (count > kMaxSamples) {
    throw Error(ErrorKind::limit, "sample count exceeds 1e8");
  }
  const int n = v.players();
  const CounterRng rng(seed);
  SampleBatch batch;
  batch.seed = seed;
  batch.values.resize(count);
#pragma omp parallel
  {
    std::vector<double> x(n);
#pragma omp for
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(count); ++i) {
      for (int k = 0; k < n; ++k) {
        x[k] = rng.uniform(static_cast<std::uint64_t>(i) * n + k);
      }
      batch.values[i] = eval_sorted(v, x);
    }
  }
  std::sort(batch.values.begin(), batch.values.end());
  return batch;
}

double ks_statistic(const SampleBatch& batch, const Capacity& v) {
  if (batch.values.empty()) {
    throw Error(ErrorKind::domain, "KS statistic of an empty batch");
  }
  const auto exact = cdf(v, batch.values);
  const double count = static_cast<double>(batch.values.size());
  double d = 0.0;
  for (std::size_t i = 0; i < exact.size(); ++i) {
    const double below = static_cast<double>(i) / count;
    const double above = static_cast<double>(i + 1) / count;
    d = std::max({d, exact[i] - below, above - exact[i]});
  }
  return d;
}

double ks_critical_value(std::size_t count) {
  return 1.95 / std::sqrt(static_cast<double>(count));
}

namespace {

double chain_sum(const Capacity& v, Subset parent, int depth, int r) {
  if (depth == r) return 1.0;
  const int parent_size = cardinality(parent);
  double sum = 0.0;
  for (Subset a = parent;; a = (a - 1) & parent) {
    sum += v[a] / detail::binomial(parent_size, cardinality(a)) *
           chain_sum(v, a, depth + 1, r);
    if (a == 0) break;
  }
  return sum;
}

}  // namespace

double brute_chain_moment(const Capacity& v, int r) {
  const int n = v.players();
  if (n > 4 || r < 1 || r > 3) {
    throw Error(ErrorKind::limit, "literal chain sum needs n <= 4, 1 <= r <= 3");
  }
  return chain_sum(v, full_set(n), 0, r) / detail::binomial(n + r, r);
}

double divdiff_distinct(const std::function<double(double)>& g,
                        std::span<const double> knots) {
  double sum = 0.0;
  for (std::size_t i = 0; i < knots.size(); ++i) {
    double denominator = 1.0;
    for (std::size_t j = 0; j < knots.size(); ++j) {
      if (j == i) continue;
      if (knots[i] == knots[j]) {
        throw Error(ErrorKind::domain, "quotient formula needs distinct knots");
      }
      denominator *= knots[i] - knots[j];
    }
    sum += g(knots[i]) / denominator;
  }
  return sum;
}

double cdf_distinct_knots(const Capacity& v, double y) {
  const int n = v.players();
  if (n > kMaxGeneralPlayers) {
    throw Error(ErrorKind::limit, "quotient formula is limited to n <= 10");
  }
  const auto truncated = [&](double x) {
    return x > y ? std::pow(x - y, n) : 0.0;
  };
  std::vector<int> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 0);
  double sum = 0.0;
  double chains = 0.0;
  do {
    sum += divdiff_distinct(truncated, knot_profile(v, sigma));
    chains += 1.0;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return 1.0 - sum / chains;
}

}  // namespace choqdist::oracle
