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

#include <algorithm>
#include <numeric>
#include <string>

#include "choqdist/distribution.hpp"
#include "choqdist/error.hpp"
#include "moments_impl.hpp"

namespace choqdist::reference {

namespace {

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

template <class Kernel>
double sum_over_permutations(const Capacity& v, Kernel kernel) {
  if (v.players() > kMaxGeneralPlayers) {
    throw Error(ErrorKind::limit, "reference path is limited to n <= 10");
  }
  std::vector<int> sigma(v.players());
  std::iota(sigma.begin(), sigma.end(), 0);
  double sum = 0.0;
  do {
    sum += kernel(knot_profile(v, sigma));
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return sum;
}

}  // namespace

double cdf(const Capacity& v, double y) {
  const int n = v.players();
  const double tail = sum_over_permutations(v, [&](const auto& knots) {
    return truncated_power_divdiff(y, knots, Truncation::plus, n);
  });
  return std::clamp(1.0 - tail / factorial(n), 0.0, 1.0);
}

double cdf_minus(const Capacity& v, double y) {
  const double sum = sum_over_permutations(
      v, [&](const auto& knots) { return varsi_minus(y, knots); });
  return std::clamp(sum / factorial(v.players()), 0.0, 1.0);
}

double pdf(const Capacity& v, double y) {
  const double sum = sum_over_permutations(
      v, [&](const auto& knots) { return varsi_plus(y, knots); });
  return std::max(0.0, sum / factorial(v.players() - 1));
}

DistributionGrid distribution_grid(const Capacity& v, const GridSpec& spec) {
  if (spec.points < 2 || !(spec.lo < spec.hi)) {
    throw Error(ErrorKind::domain, "reference grid needs lo < hi, points >= 2");
  }
  DistributionGrid grid;
  const auto knots = knot_values(v);
  grid.point_mass = is_point_mass(v);
  for (std::size_t j = 0; j < spec.points; ++j) {
    const double y =
        j + 1 == spec.points
            ? spec.hi
            : spec.lo + (spec.hi - spec.lo) / static_cast<double>(spec.points - 1) *
                            static_cast<double>(j);
    grid.y.push_back(y);
    grid.cdf.push_back(reference::cdf(v, y));
    grid.pdf.push_back(grid.point_mass ? 0.0 : reference::pdf(v, y));
    grid.at_knot.push_back(std::binary_search(knots.begin(), knots.end(), y));
  }
  return grid;
}

double raw_moment(const Capacity& v, int r) {
  if (r < 1 || r > kMaxMomentOrder) {
    throw Error(ErrorKind::limit, "moment order must be in [1, 12]");
  }
  const int n = v.players();
  const std::size_t size = v.size();
  std::vector<double> f(size, 1.0), next(size);
  for (int k = 1; k <= r; ++k) {
    for (Subset a = 0; a < size; ++a) {
      double sum = 0.0;
      const int na = cardinality(a);
      // all submasks b of a, including the empty set
      for (Subset b = a;; b = (b - 1) & a) {
        sum += v[b] * f[b] / detail::binomial(na, cardinality(b));
        if (b == 0) break;
      }
      next[a] = sum;
    }
    f.swap(next);
  }
  return f[size - 1] / detail::binomial(n + r, r);
}

}  // namespace choqdist::reference
