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

#include <cmath>
#include <functional>
#include <span>
#include <vector>

namespace choqdist::testing {

inline double choose(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  double c = 1.0;
  for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return c;
}

/// Regularized incomplete Beta I_y(k, n-k+1) for integers, i.e. the cdf of
/// the k-th smallest of n uniforms: P(Bin(n, y) >= k).
inline double order_statistic_cdf(int n, int k, double y) {
  if (y <= 0.0) return 0.0;
  if (y >= 1.0) return 1.0;
  double sum = 0.0;
  for (int j = k; j <= n; ++j) {
    sum += choose(n, j) * std::pow(y, j) * std::pow(1.0 - y, n - j);
  }
  return sum;
}

/// cdf of the mean of n uniforms (Bates) via the Irwin-Hall sum.
inline double bates_cdf(int n, double y) {
  const double x = n * y;
  if (x <= 0.0) return 0.0;
  if (x >= n) return 1.0;
  double sum = 0.0;
  double factorial = 1.0;
  for (int i = 2; i <= n; ++i) factorial *= i;
  for (int k = 0; k <= static_cast<int>(std::floor(x)); ++k) {
    sum += (k % 2 ? -1.0 : 1.0) * choose(n, k) * std::pow(x - k, n);
  }
  return sum / factorial;
}

/// Composite Simpson rule with an even number of panels.
inline double simpson(const std::function<double(double)>& f, double a,
                      double b, int panels) {
  if (panels % 2) ++panels;
  const double h = (b - a) / panels;
  double sum = f(a) + f(b);
  for (int i = 1; i < panels; ++i) sum += (i % 2 ? 4.0 : 2.0) * f(a + i * h);
  return sum * h / 3.0;
}

/// 8-point Gauss-Legendre on each of `sub` panels between consecutive
/// breakpoints. Never evaluates f at a breakpoint.
inline double integrate_piecewise(const std::function<double(double)>& f,
                                  std::span<const double> breakpoints,
                                  int sub = 4) {
  static const double nodes[4] = {0.1834346424956498, 0.5255324099163290,
                                  0.7966664774136267, 0.9602898564975363};
  static const double weights[4] = {0.3626837833783620, 0.3137066458778873,
                                    0.2223810344533745, 0.1012285362903763};
  double total = 0.0;
  for (std::size_t p = 0; p + 1 < breakpoints.size(); ++p) {
    const double a = breakpoints[p];
    const double b = breakpoints[p + 1];
    const double h = (b - a) / sub;
    for (int s = 0; s < sub; ++s) {
      const double mid = a + (s + 0.5) * h;
      const double half = 0.5 * h;
      for (int q = 0; q < 4; ++q) {
        total += weights[q] * half *
                 (f(mid - half * nodes[q]) + f(mid + half * nodes[q]));
      }
    }
  }
  return total;
}

}  // namespace choqdist::testing
