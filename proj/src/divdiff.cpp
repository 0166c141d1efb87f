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

#include "choqdist/divdiff.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <string>

#include "choqdist/error.hpp"

namespace choqdist {

Polynomial::Polynomial(std::vector<double> coefficients)
    : coeffs_(std::move(coefficients)) {
  while (coeffs_.size() > 1 && coeffs_.back() == 0.0) coeffs_.pop_back();
}

Polynomial Polynomial::monomial(int degree, double c) {
  std::vector<double> coeffs(degree + 1, 0.0);
  coeffs[degree] = c;
  return Polynomial(std::move(coeffs));
}

double Polynomial::operator()(double x) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * x + *it;
  }
  return acc;
}

Polynomial Polynomial::derivative(int order) const {
  if (order > degree()) return Polynomial({0.0});
  std::vector<double> out(coeffs_.size() - order);
  for (std::size_t i = 0; i < out.size(); ++i) {
    double c = coeffs_[i + order];
    for (int j = 0; j < order; ++j) c *= static_cast<double>(i + order - j);
    out[i] = c;
  }
  return Polynomial(std::move(out));
}

namespace {

void require_knots(std::span<const double> knots, std::size_t minimum) {
  if (knots.size() < minimum) {
    throw Error(ErrorKind::domain, "need at least " + std::to_string(minimum) +
                                       " knots, got " +
                                       std::to_string(knots.size()));
  }
  for (double a : knots) {
    if (!std::isfinite(a)) throw Error(ErrorKind::domain, "knot not finite");
  }
}

// Upper-triangular Newton table over sorted knots; `diagonal(i, j)` supplies
// the entry when knots i..j coincide.
template <class Leaf, class Diagonal>
double newton_table(std::span<const double> a, Leaf leaf, Diagonal diagonal) {
  const std::size_t m = a.size();
  std::vector<double> column(m);
  for (std::size_t i = 0; i < m; ++i) column[i] = leaf(a[i]);
  for (std::size_t order = 1; order < m; ++order) {
    for (std::size_t i = 0; i + order < m; ++i) {
      const std::size_t j = i + order;
      column[i] = a[i] == a[j] ? diagonal(i, order)
                               : (column[i + 1] - column[i]) / (a[j] - a[i]);
    }
  }
  return column[0];
}

}  // namespace

double divdiff_recursive(const Polynomial& g, std::span<const double> knots) {
  require_knots(knots, 1);
  std::vector<double> a(knots.begin(), knots.end());
  std::sort(a.begin(), a.end());
  return newton_table(
      a, [&](double x) { return g(x); },
      [&](std::size_t i, std::size_t order) {
        double factorial = 1.0;
        for (std::size_t k = 2; k <= order; ++k) factorial *= k;
        return g.derivative(static_cast<int>(order))(a[i]) / factorial;
      });
}

double divdiff_recursive(const std::function<double(double)>& g,
                         std::span<const double> knots) {
  require_knots(knots, 1);
  std::vector<double> a(knots.begin(), knots.end());
  std::sort(a.begin(), a.end());
  if (std::adjacent_find(a.begin(), a.end()) != a.end()) {
    throw Error(ErrorKind::domain,
                "coincident knots need derivatives; pass a Polynomial");
  }
  return newton_table(
      a, g, [](std::size_t, std::size_t) -> double { return 0.0; });
}

std::vector<double> complete_homogeneous(std::span<const double> knots,
                                         int order) {
  std::vector<double> h(order + 1, 0.0);
  h[0] = 1.0;
  for (double a : knots) {
    for (int k = 1; k <= order; ++k) h[k] += a * h[k - 1];
  }
  return h;
}

double divdiff_power_sym(int degree, std::span<const double> knots) {
  require_knots(knots, 1);
  const int n = static_cast<int>(knots.size()) - 1;
  if (degree < n) return 0.0;
  return complete_homogeneous(knots, degree - n).back();
}

namespace detail {

namespace {

// Fills alpha for b = sorted[0, r), c = sorted[r, m); requires r, s >= 1.
void fill_tableau(double y, std::span<const double> b,
                  std::span<const double> c, Truncation start,
                  std::span<double> alpha) {
  const std::size_t r = b.size();
  const std::size_t s = c.size();
  const std::size_t stride = s + 1;
  const bool plus = start == Truncation::plus;

  for (std::size_t l = 0; l <= s; ++l) alpha[l] = 0.0;
  for (std::size_t k = 1; k <= r; ++k) alpha[k * stride] = plus ? 0.0 : 1.0;

  for (std::size_t k = 1; k <= r; ++k) {
    const double bk = b[k - 1];
    for (std::size_t l = 1; l <= s; ++l) {
      const double cl = c[l - 1];
      double value;
      if (plus && k == 1 && l == 1) {
        value = 1.0 / (cl - bk);
      } else {
        value = ((cl - y) * alpha[(k - 1) * stride + l] +
                 (y - bk) * alpha[k * stride + l - 1]) /
                (cl - bk);
      }
      assert(!plus || value >= 0.0);
      alpha[k * stride + l] = value;
    }
  }
}

// Knots equal to y join b, which makes the kernels right-continuous in y.
std::size_t split_point(double y, std::span<const double> sorted) {
  return static_cast<std::size_t>(
      std::upper_bound(sorted.begin(), sorted.end(), y) - sorted.begin());
}

}  // namespace

std::size_t tableau_scratch_size(std::size_t knot_count) {
  const std::size_t r = knot_count / 2;
  return (r + 1) * (knot_count - r + 1);
}

PlusKernels plus_kernels_sorted(double y, std::span<const double> sorted,
                                std::span<double> scratch) {
  if (sorted.front() == sorted.back()) {
    return {sorted.front() > y ? 1.0 : 0.0, 0.0};
  }
  const std::size_t r = split_point(y, sorted);
  const std::size_t s = sorted.size() - r;
  if (r == 0) return {1.0, 0.0};
  if (s == 0) return {0.0, 0.0};

  const auto b = sorted.first(r);
  const auto c = sorted.subspan(r);
  fill_tableau(y, b, c, Truncation::plus, scratch);

  // Leibniz on (x-y) * (x-y)_+^{n-1}, unrolled along b_r..b_1, c_s..c_1,
  // leaves one term per entry of the last column.
  const std::size_t stride = s + 1;
  double lower = 0.0;
  for (std::size_t k = 1; k <= r; ++k) {
    lower += (y - b[k - 1]) * scratch[k * stride + s];
  }
  return {1.0 - lower, scratch[r * stride + s]};
}

double minus_kernel_sorted(double y, std::span<const double> sorted,
                           std::span<double> scratch) {
  if (sorted.front() == sorted.back()) {
    return sorted.front() <= y ? 1.0 : 0.0;
  }
  const std::size_t r = split_point(y, sorted);
  const std::size_t s = sorted.size() - r;
  if (r == 0) return 0.0;
  if (s == 0) return 1.0;

  fill_tableau(y, sorted.first(r), sorted.subspan(r), Truncation::minus,
               scratch);
  return scratch[r * (s + 1) + s];
}

}  // namespace detail

VarsiTableau varsi_tableau(double y, std::span<const double> knots,
                           Truncation start) {
  require_knots(knots, 2);
  VarsiTableau t;
  t.y = y;
  t.start = start;
  std::vector<double> sorted(knots.begin(), knots.end());
  std::sort(sorted.begin(), sorted.end());
  const auto r = static_cast<std::size_t>(
      std::upper_bound(sorted.begin(), sorted.end(), y) - sorted.begin());
  t.below.assign(sorted.begin(), sorted.begin() + r);
  t.above.assign(sorted.begin() + r, sorted.end());
  t.alpha.assign((t.rows() + 1) * (t.cols() + 1), 0.0);
  if (start == Truncation::minus) {
    for (std::size_t k = 1; k <= t.rows(); ++k) {
      t.alpha[k * (t.cols() + 1)] = 1.0;
    }
  }
  if (t.rows() > 0 && t.cols() > 0) {
    detail::fill_tableau(y, t.below, t.above, start, t.alpha);
  }
  return t;
}

namespace {

struct SortedKnots {
  std::vector<double> sorted;
  std::vector<double> scratch;

  explicit SortedKnots(std::span<const double> knots)
      : sorted(knots.begin(), knots.end()),
        scratch(detail::tableau_scratch_size(knots.size())) {
    std::sort(sorted.begin(), sorted.end());
  }
};

}  // namespace

double varsi_plus(double y, std::span<const double> knots) {
  require_knots(knots, 2);
  SortedKnots k(knots);
  return detail::plus_kernels_sorted(y, k.sorted, k.scratch).density;
}

double varsi_minus(double y, std::span<const double> knots) {
  require_knots(knots, 2);
  SortedKnots k(knots);
  return detail::minus_kernel_sorted(y, k.sorted, k.scratch);
}

double truncated_power_divdiff(double y, std::span<const double> knots,
                               Truncation truncation, int degree) {
  require_knots(knots, 2);
  const int n = static_cast<int>(knots.size()) - 1;
  SortedKnots k(knots);
  if (degree == n - 1) {
    // (x-y)^{n-1} has a vanishing n-th divided difference, so the two
    // truncations differ only in sign.
    const double plus =
        detail::plus_kernels_sorted(y, k.sorted, k.scratch).density;
    return truncation == Truncation::plus ? plus : -plus;
  }
  if (degree == n) {
    return truncation == Truncation::plus
               ? detail::plus_kernels_sorted(y, k.sorted, k.scratch).upper_tail
               : detail::minus_kernel_sorted(y, k.sorted, k.scratch);
  }
  throw Error(ErrorKind::domain, "truncated power degree must be n-1 or n");
}

double bspline(double t, std::span<const double> knots) {
  require_knots(knots, 2);
  return static_cast<double>(knots.size() - 1) * varsi_plus(t, knots);
}

}  // namespace choqdist
