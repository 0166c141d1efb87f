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

// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <string>
#include <vector>

#include "choqdist/capacity.hpp"
#include "choqdist/distribution.hpp"
#include "choqdist/oracle.hpp"
#include "choqdist/parallel.hpp"
#include "support/closed_forms.hpp"
#include "support/generators.hpp"

namespace {

using namespace choqdist;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

Polynomial scaled_monomial(int degree, double scale) {
  std::vector<double> c(degree + 1, 0.0);
  c[degree] = scale;
  return Polynomial(c);
}

// E[Y^r] as the chain sum of divided differences of x^(n+r) r! / (n+r)!
double chain_sum_moment(const Capacity& v, int r) {
  const int n = v.players();
  return expectation_functional(
      v, scaled_monomial(n + r, factorial(r) / factorial(n + r)));
}

bool near_knot(const std::vector<double>& knots, double y, double gap) {
  return std::any_of(knots.begin(), knots.end(),
                     [&](double k) { return std::abs(k - y) < gap; });
}

struct Outcome {
  bool pass;
  std::string detail;
};

std::string fmt(const char* format, double a, double b = 0.0, double c = 0.0) {
  char buffer[256];
  std::snprintf(buffer, sizeof buffer, format, a, b, c);
  return buffer;
}

Outcome mean_criterion() {
  const Capacity v = testing::example_capacity();
  const double brute = oracle::brute_chain_moment(v, 1);
  double best = 1e9;
  MomentTable table;
  for (int rep = 0; rep < 5; ++rep) {
    const auto start = Clock::now();
    table = moment_table(v, 2);
    best = std::min(best, seconds_since(start));
  }
  const double err = std::abs(table.mean - brute);
  const double exact_err = std::abs(table.mean - 73.0 / 120.0);
  return {err <= 1e-9 && exact_err <= 1e-9 && best < 0.010,
          fmt("mean=%.12f |mean-brute|=%.2e time=%.2es", table.mean, err, best)};
}

Outcome std_criterion() {
  const Capacity v = testing::example_capacity();
  const auto table = moment_table(v, 2);
  const double recursion = raw_moment(v, 2);
  const double chains = chain_sum_moment(v, 2);
  const double brute = oracle::brute_chain_moment(v, 2);
  const double agree = std::max(std::abs(recursion - chains),
                                std::abs(recursion - brute));
  return {std::abs(table.stddev - 0.204) <= 5e-4 && agree <= 1e-10,
          fmt("std=%.12f E[Y^2] recursion vs chain sums %.2e", table.stddev,
              agree)};
}

Outcome density_criterion() {
  const Capacity v = testing::example_capacity();
  const auto start = Clock::now();
  const auto grid = distribution_grid(v, {0.0, 1.0, 512});
  const double elapsed = seconds_since(start);

  const bool nonnegative = std::all_of(grid.pdf.begin(), grid.pdf.end(),
                                       [](double f) { return f >= 0.0; });
  // Simpson between consecutive knots, 10^4 panels in total; the density
  // is a polynomial on each piece.
  const auto knots = knot_values(v);
  double mass = 0.0;
  for (std::size_t p = 0; p + 1 < knots.size(); ++p) {
    const double a = knots[p], b = knots[p + 1];
    const int panels = std::max(2, static_cast<int>(std::lround(1e4 * (b - a))));
    mass += testing::simpson([&](double y) { return pdf(v, y); }, a, b, panels);
  }
  const std::size_t count = 10'000;
  const auto batch = oracle::sample(v, count, 1);
  const double ks = oracle::ks_statistic(batch, v);
  const double critical = oracle::ks_critical_value(count);
  return {nonnegative && std::abs(mass - 1.0) <= 1e-6 && ks < critical &&
              elapsed < 1.0,
          fmt("|mass-1|=%.2e KS=%.4f grid time=%.3fs", std::abs(mass - 1.0),
              ks, elapsed)};
}

Outcome order_statistic_criterion() {
  double worst = 0.0;
  for (int n = 2; n <= 8; ++n) {
    for (int k = 1; k <= n; ++k) {
      const Capacity v = testing::order_statistic_capacity(n, k);
      for (int j = 0; j <= 100; ++j) {
        const double y = j / 100.0;
        worst = std::max(worst, std::abs(cdf_symmetric(v, y) -
                                         testing::order_statistic_cdf(n, k, y)));
      }
    }
  }
  return {worst <= 1e-9, fmt("max error %.2e", worst)};
}

Outcome bates_criterion() {
  double worst = 0.0;
  for (int n = 2; n <= 6; ++n) {
    const Capacity v = testing::additive_capacity(std::vector<double>(n, 1.0 / n));
    for (int j = 0; j <= 100; ++j) {
      const double y = j / 100.0;
      const double expected = testing::bates_cdf(n, y);
      worst = std::max(worst, std::abs(cdf(v, y) - expected));
      worst = std::max(worst, std::abs(reference::cdf(v, y) - expected));
    }
  }
  return {worst <= 1e-8, fmt("max error %.2e (symmetric and n! paths)", worst)};
}

Outcome min_max_criterion() {
  double worst = 0.0;
  for (int n = 1; n <= 8; ++n) {
    const Capacity lo = testing::min_capacity(n);
    const Capacity hi = testing::max_capacity(n);
    for (int j = 0; j <= 50; ++j) {
      const double y = j / 50.0;
      const double fmin = 1.0 - std::pow(1.0 - y, n);
      const double fmax = std::pow(y, n);
      worst = std::max({worst, std::abs(cdf(lo, y) - fmin),
                        std::abs(cdf(hi, y) - fmax),
                        std::abs(reference::cdf(hi, y) - fmax)});
      if (j > 0 && j < 50) {
        worst = std::max(worst, std::abs(cdf_minus(lo, y) - fmin));
      }
    }
  }
  return {worst <= 1e-10, fmt("max error %.2e", worst)};
}

Outcome path_equivalence_criterion() {
  double plus_minus = 0.0, general_symmetric = 0.0, quotient = 0.0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const int n = 2 + static_cast<int>(seed % 6);
    const Capacity v = testing::random_capacity(n, 7000 + seed);
    const auto knots = knot_values(v);
    const oracle::CounterRng rng(seed);
    for (int j = 0; j < 10; ++j) {
      const double y = -1.0 + 2.0 * rng.uniform(j);
      if (near_knot(knots, y, 1e-9)) continue;
      const double plus = cdf(v, y);
      plus_minus = std::max(plus_minus, std::abs(plus - cdf_minus(v, y)));
      const double q = oracle::cdf_distinct_knots(v, y);
      quotient = std::max(quotient, std::abs(plus - q) / std::max(std::abs(q), 1.0));
    }
    const Capacity s = testing::random_cardinality_capacity(n, 8000 + seed, -0.5, 1.0);
    for (int j = 0; j < 10; ++j) {
      const double y = -1.0 + 3.0 * rng.uniform(100 + j);
      general_symmetric = std::max(
          general_symmetric, std::abs(cdf_symmetric(s, y) - reference::cdf(s, y)));
    }
  }
  return {plus_minus <= 1e-10 && general_symmetric <= 1e-10 && quotient <= 1e-8,
          fmt("plus/minus %.2e, n!/symmetric %.2e, quotient formula %.2e",
              plus_minus, general_symmetric, quotient)};
}

Outcome moment_criterion() {
  double mutual = 0.0, quadrature = 0.0;
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const int n = 1 + static_cast<int>(seed % 4);
    const Capacity v = testing::random_capacity(n, 9000 + seed);
    for (int r = 1; r <= 3; ++r) {
      const double a = raw_moment(v, r);
      const double b = chain_sum_moment(v, r);
      const double c = oracle::brute_chain_moment(v, r);
      mutual = std::max({mutual, std::abs(a - b), std::abs(a - c), std::abs(b - c)});
    }
  }
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    const int n = 2 + static_cast<int>(seed % 5);
    const Capacity v = testing::random_capacity(n, 9500 + seed);
    const auto knots = knot_values(v);
    for (int r = 1; r <= 3; ++r) {
      const double integral = testing::integrate_piecewise(
          [&](double y) { return std::pow(y, r) * pdf(v, y); }, knots);
      quadrature = std::max(quadrature, std::abs(integral - raw_moment(v, r)));
    }
  }
  return {mutual <= 1e-10 && quadrature <= 1e-5,
          fmt("recursion/chain sums/literal %.2e, density quadrature %.2e",
              mutual, quadrature)};
}

Outcome derivative_criterion() {
  double worst = 0.0;
  int checked = 0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const int n = 2 + static_cast<int>(seed % 5);
    const Capacity v = testing::random_monotone_capacity(n, 600 + seed);
    const auto knots = knot_values(v);
    const oracle::CounterRng rng(seed + 1);
    const double h = 1e-6;
    int taken = 0;
    for (std::uint64_t j = 0; taken < 50; ++j) {
      const double y = rng.uniform(j);
      if (near_knot(knots, y, 1e-4)) continue;
      ++taken;
      const double slope = (cdf(v, y + h) - cdf(v, y - h)) / (2 * h);
      worst = std::max(worst, std::abs(slope - pdf(v, y)));
    }
    checked += taken;
  }
  return {worst <= 1e-4, fmt("max |FD - pdf| %.2e over %.0f points", worst, checked)};
}

Outcome performance_criterion() {
  const Capacity v = testing::random_monotone_capacity(8, 2026);
  const int saved = thread_count();
  set_thread_count(1);
  const auto start = Clock::now();
  const auto serial = distribution_grid(v, {0.0, 1.0, 512});
  const double elapsed = seconds_since(start);
  set_thread_count(4);
  const auto parallel = distribution_grid(v, {0.0, 1.0, 512});
  set_thread_count(saved);
  const bool identical =
      std::memcmp(serial.cdf.data(), parallel.cdf.data(),
                  serial.cdf.size() * sizeof(double)) == 0 &&
      std::memcmp(serial.pdf.data(), parallel.pdf.data(),
                  serial.pdf.size() * sizeof(double)) == 0;
  return {elapsed < 30.0 && identical,
          fmt("n=8 single-thread %.2fs, 4-thread output bit-identical: %.0f",
              elapsed, identical)};
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  const Criterion criteria[] = {
      {"AC1 example mean", mean_criterion},
      {"AC2 example std", std_criterion},
      {"AC3 example density", density_criterion},
      {"AC4 order statistics", order_statistic_criterion},
      {"AC5 Bates", bates_criterion},
      {"AC6 min/max", min_max_criterion},
      {"AC7 path equivalence", path_equivalence_criterion},
      {"AC8 moment cross-validation", moment_criterion},
      {"AC9 derivative check", derivative_criterion},
      {"AC10 performance and determinism", performance_criterion},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    Outcome outcome{false, ""};
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome.detail = std::string("exception: ") + e.what();
    }
    if (!outcome.pass) ++failures;
    std::printf("[%s] %s: %s\n", outcome.pass ? "PASS" : "FAIL", c.name,
                outcome.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n",
              static_cast<int>(std::size(criteria)) - failures, std::size(criteria));
  return failures == 0 ? 0 : 1;
}
