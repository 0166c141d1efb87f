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
#include <vector>

#include "choqdist/capacity.hpp"
#include "choqdist/divdiff.hpp"

namespace choqdist {

// Distribution of Y = h(X) where h is the Lovász extension of a capacity
// and X is uniform on [0,1]^n.
//
// The general routines sum over all n! maximal chains and are limited to
// n <= 10 (Error{limit} above that). Cardinality-based capacities use a
// single chain and accept any n <= 20.

inline constexpr int kMaxGeneralPlayers = 10;
inline constexpr int kMaxMomentOrder = 12;
inline constexpr std::size_t kMaxGridPoints = 100000;

/// P(Y <= y) as one minus the chain average of the plus-truncated divided
/// differences. Dispatches to cdf_symmetric for cardinality-based v.
double cdf(const Capacity& v, double y);

/// Vectorized cdf; chains are enumerated once per tile of points.
std::vector<double> cdf(const Capacity& v, std::span<const double> ys);

/// P(Y <= y) through the minus-truncated divided differences. Always takes
/// the n! path, as an independent second route.
double cdf_minus(const Capacity& v, double y);

/// Density: chain average of B-splines. Right-sided at knots.
double pdf(const Capacity& v, double y);

/// Single-chain formulas for cardinality-based capacities (linear
/// combinations of order statistics). Throws Error{domain} otherwise.
double cdf_symmetric(const Capacity& v, double y);
double pdf_symmetric(const Capacity& v, double y);

/// True when Y is almost surely constant (v identically zero).
bool is_point_mass(const Capacity& v);

/// Smallest and largest capacity value: the support hull of Y.
struct Support {
  double lo;
  double hi;
};
Support support(const Capacity& v);

/// Every capacity value, sorted and deduplicated: the points where the
/// density may fail to be smooth.
std::vector<double> knot_values(const Capacity& v);

struct GridSpec {
  double lo = 0.0;
  double hi = 1.0;
  std::size_t points = 512;
};

struct DistributionGrid {
  std::vector<double> y;
  std::vector<double> cdf;
  std::vector<double> pdf;
  std::vector<bool> at_knot;
  bool point_mass = false;  // pdf is meaningless, Y is constant
};

/// cdf and pdf on an evenly spaced grid (a single point when lo == hi).
DistributionGrid distribution_grid(const Capacity& v, const GridSpec& spec);

/// Smallest y with cdf(y) >= p, by bisection to 1e-10.
double quantile(const Capacity& v, double p);

/// E[Y^r] through the down-set recursion
///   F_0 = 1, F_k(A) = sum_{B subset A} v(B) F_{k-1}(B) / C(|A|, |B|),
///   E[Y^r] = F_r([n]) / C(n + r, r).
double raw_moment(const Capacity& v, int r);

struct MomentTable {
  int order = 0;
  std::vector<double> raw;      // raw[r-1] = E[Y^r]
  std::vector<double> central;  // central[r-1] = E[(Y - mean)^r]
  double mean = 0.0;
  double stddev = 0.0;
};

MomentTable moment_table(const Capacity& v, int order);

/// E[g^(n)(Y)] as the sum over chains of the divided difference of g.
double expectation_functional(const Capacity& v, const Polynomial& g);

namespace reference {

// Serial implementations kept as a baseline for the parallel kernels:
// std::next_permutation over sigma, one knot_profile per permutation and
// the public divided-difference entry points, summed in order.
double cdf(const Capacity& v, double y);
double cdf_minus(const Capacity& v, double y);
double pdf(const Capacity& v, double y);
DistributionGrid distribution_grid(const Capacity& v, const GridSpec& spec);
/// Direct O(r 3^n) submask recursion.
double raw_moment(const Capacity& v, int r);

}  // namespace reference

}  // namespace choqdist
