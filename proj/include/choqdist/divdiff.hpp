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

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace choqdist {

/// Real polynomial with coefficients in ascending degree order.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<double> coefficients);

  /// c * x^degree
  static Polynomial monomial(int degree, double c = 1.0);

  double operator()(double x) const;
  Polynomial derivative(int order = 1) const;
  int degree() const noexcept {
    return static_cast<int>(coeffs_.size()) - 1;
  }
  std::span<const double> coefficients() const noexcept { return coeffs_; }

 private:
  std::vector<double> coeffs_;
};

/// Reference divided difference from the recursive definition. Coincident
/// knots use Taylor coefficients g^(k)(a)/k!, so repeated knots are fine.
double divdiff_recursive(const Polynomial& g, std::span<const double> knots);

/// Same recursion for an arbitrary function; knots must be pairwise
/// distinct (throws Error{domain} otherwise).
double divdiff_recursive(const std::function<double(double)>& g,
                         std::span<const double> knots);

/// Complete homogeneous symmetric polynomials h_0..h_order of the knots.
std::vector<double> complete_homogeneous(std::span<const double> knots,
                                         int order);

/// Divided difference of x^degree over the knots, i.e. h_{degree-n} of the
/// n+1 knots; 0 for degree < n.
double divdiff_power_sym(int degree, std::span<const double> knots);

enum class Truncation { plus, minus };

/// Full de Boor-Varsi tableau for one evaluation point. Knots at or below y
/// are `below` (b_1..b_r), knots above y are `above` (c_1..c_s), both
/// ascending. alpha(k, l) is the divided difference over b_1..b_k, c_1..c_l
/// of (.-y)_+^{k+l-2} (plus start) or (.-y)_-^{k+l-1} (minus start).
struct VarsiTableau {
  double y = 0.0;
  Truncation start = Truncation::plus;
  std::vector<double> below;
  std::vector<double> above;
  std::vector<double> alpha;  // (r+1) x (s+1), row-major

  std::size_t rows() const noexcept { return below.size(); }
  std::size_t cols() const noexcept { return above.size(); }
  double at(std::size_t k, std::size_t l) const {
    return alpha[k * (above.size() + 1) + l];
  }
};

VarsiTableau varsi_tableau(double y, std::span<const double> knots,
                           Truncation start);

/// Divided difference of (.-y)_+^{n-1} over n+1 knots (any order, repeats
/// allowed). Requires at least two knots.
double varsi_plus(double y, std::span<const double> knots);

/// Divided difference of (.-y)_-^n over n+1 knots.
double varsi_minus(double y, std::span<const double> knots);

/// Divided difference of (.-y)_{+/-}^degree over n+1 knots for degree n-1
/// or n. varsi_plus and varsi_minus are the two fixed pairings of this.
double truncated_power_divdiff(double y, std::span<const double> knots,
                               Truncation truncation, int degree);

/// Normalized B-spline M(t | knots) = n * varsi_plus(t, knots).
double bspline(double t, std::span<const double> knots);

namespace detail {

// Hot-path kernels over knots already sorted ascending. `scratch` must hold
// tableau_scratch_size(knots.size()) doubles.
//
// A knot equal to y counts as "below", so every kernel is right-continuous
// in y. When every knot coincides (a point mass) the density is 0.

struct PlusKernels {
  double upper_tail;  // divided difference of (.-y)_+^n
  double density;     // divided difference of (.-y)_+^{n-1}
};

std::size_t tableau_scratch_size(std::size_t knot_count);

PlusKernels plus_kernels_sorted(double y, std::span<const double> sorted,
                                std::span<double> scratch);

double minus_kernel_sorted(double y, std::span<const double> sorted,
                           std::span<double> scratch);

}  // namespace detail

}  // namespace choqdist
