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
#include <string>

#include "choqdist/distribution.hpp"
#include "choqdist/error.hpp"
#include "moments_impl.hpp"

namespace choqdist::detail {

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  k = std::min(k, n - k);
  double c = 1.0;
  for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return c;
}

std::vector<double> raw_moments_upto(const Capacity& v, int order) {
  if (order < 1 || order > kMaxMomentOrder) {
    throw Error(ErrorKind::limit, "moment order must be in [1, 12], got " +
                                      std::to_string(order));
  }
  const int n = v.players();
  const std::size_t size = v.size();

  std::vector<double> inverse_binomial((n + 1) * (n + 1));
  for (int a = 0; a <= n; ++a) {
    for (int b = 0; b <= a; ++b) {
      inverse_binomial[a * (n + 1) + b] = 1.0 / binomial(a, b);
    }
  }

  // F_k(A) = sum_j Z_j(A) / C(|A|, j) where Z_j is the zeta transform of
  // g(B) = v(B) F_{k-1}(B) restricted to |B| = j.
  std::vector<double> f(size, 1.0);
  std::vector<double> next(size);
  std::vector<double> z(size);
  std::vector<double> moments(order);
  for (int k = 1; k <= order; ++k) {
    std::fill(next.begin(), next.end(), 0.0);
    for (int j = 1; j <= n; ++j) {
#pragma omp parallel for
      for (std::ptrdiff_t s = 0; s < static_cast<std::ptrdiff_t>(size); ++s) {
        const auto b = static_cast<Subset>(s);
        z[s] = cardinality(b) == j ? v[b] * f[s] : 0.0;
      }
      for (int i = 0; i < n; ++i) {
        const Subset bit = Subset{1} << i;
#pragma omp parallel for
        for (std::ptrdiff_t s = 0; s < static_cast<std::ptrdiff_t>(size);
             ++s) {
          if (s & bit) z[s] += z[s ^ bit];
        }
      }
#pragma omp parallel for
      for (std::ptrdiff_t s = 0; s < static_cast<std::ptrdiff_t>(size); ++s) {
        const int a = cardinality(static_cast<Subset>(s));
        if (a >= j) next[s] += z[s] * inverse_binomial[a * (n + 1) + j];
      }
    }
    f.swap(next);
    moments[k - 1] = f[size - 1] / binomial(n + k, k);
  }
  return moments;
}

}  // namespace choqdist::detail
