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

#include "choqdist/lovasz.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include "choqdist/error.hpp"

namespace choqdist {

namespace {

void check_point(int n, std::span<const double> x, bool check_range) {
  if (static_cast<int>(x.size()) != n) {
    throw Error(ErrorKind::dimension, "point has " + std::to_string(x.size()) +
                                          " coordinates, expected " +
                                          std::to_string(n));
  }
  if (!check_range) return;
  for (double xi : x) {
    if (!(xi >= 0.0 && xi <= 1.0)) {
      throw Error(ErrorKind::domain, "coordinate outside [0, 1]");
    }
  }
}

}  // namespace

double eval_sorted(const Capacity& v, std::span<const double> x) {
  const int n = v.players();
  check_point(n, x, true);

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return x[a] > x[b]; });

  double result = 0.0;
  double previous = 0.0;
  Subset chain = 0;
  for (int p : order) {
    chain |= Subset{1} << p;
    const double current = v[chain];
    result += (current - previous) * x[p];
    previous = current;
  }
  return result;
}

double eval_moebius(const MoebiusRepresentation& m,
                    std::span<const double> x) {
  const int n = m.players();
  check_point(n, x, true);

  // min over each subset, built from the subset without its lowest bit
  const auto coeffs = m.coefficients();
  std::vector<double> minima(coeffs.size());
  minima[0] = HUGE_VAL;
  double result = 0.0;
  for (Subset s = 1; s < coeffs.size(); ++s) {
    const int low = std::countr_zero(s);
    minima[s] = std::min(minima[s & (s - 1)], x[low]);
    if (std::abs(coeffs[s]) >= 1e-15) result += coeffs[s] * minima[s];
  }
  return result;
}

}  // namespace choqdist
