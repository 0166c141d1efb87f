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

#include "choqdist/distribution.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "chain_reduce.hpp"
#include "choqdist/error.hpp"
#include "moments_impl.hpp"

namespace choqdist {

namespace {

constexpr std::size_t kTile = 256;

// sorted knots + tableau for up to 21 knots
using KnotBuffer = std::array<double, kMaxPlayers + 1>;
using ScratchBuffer = std::array<double, 144>;

void check_general(const Capacity& v) {
  if (v.players() > kMaxGeneralPlayers) {
    throw Error(ErrorKind::limit,
                "n! chain enumeration is limited to n <= 10 (n = " +
                    std::to_string(v.players()) + ")");
  }
}

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

double clamp01(double x) { return std::clamp(x, 0.0, 1.0); }

std::span<const double> sort_into(std::span<const double> knots,
                                  KnotBuffer& buffer) {
  std::copy(knots.begin(), knots.end(), buffer.begin());
  std::sort(buffer.begin(), buffer.begin() + knots.size());
  return {buffer.data(), knots.size()};
}

struct PlusSums {
  std::vector<double> upper_tail;
  std::vector<double> density;
};

// Chain sums of both plus kernels at every y, one tableau per (chain, y).
PlusSums plus_chain_sums(const Capacity& v, std::span<const double> ys) {
  PlusSums sums{std::vector<double>(ys.size()),
                std::vector<double>(ys.size())};
  std::vector<double> out(2 * kTile);
  for (std::size_t begin = 0; begin < ys.size(); begin += kTile) {
    const std::size_t width = std::min(kTile, ys.size() - begin);
    const auto tile = ys.subspan(begin, width);
    auto accumulate = [tile, width](std::span<const double> knots,
                                    std::span<double> partial) {
      KnotBuffer buffer;
      ScratchBuffer scratch;
      const auto sorted = sort_into(knots, buffer);
      for (std::size_t j = 0; j < width; ++j) {
        const auto k = detail::plus_kernels_sorted(tile[j], sorted, scratch);
        partial[j] += k.upper_tail;
        partial[width + j] += k.density;
      }
    };
    detail::reduce_over_chains(v, accumulate,
                               std::span<double>(out.data(), 2 * width));
    std::copy_n(out.begin(), width, sums.upper_tail.begin() + begin);
    std::copy_n(out.begin() + width, width, sums.density.begin() + begin);
  }
  return sums;
}

std::vector<double> minus_chain_sums(const Capacity& v,
                                     std::span<const double> ys) {
  std::vector<double> sums(ys.size());
  std::vector<double> out(kTile);
  for (std::size_t begin = 0; begin < ys.size(); begin += kTile) {
    const std::size_t width = std::min(kTile, ys.size() - begin);
    const auto tile = ys.subspan(begin, width);
    auto accumulate = [tile, width](std::span<const double> knots,
                                    std::span<double> partial) {
      KnotBuffer buffer;
      ScratchBuffer scratch;
      const auto sorted = sort_into(knots, buffer);
      for (std::size_t j = 0; j < width; ++j) {
        partial[j] += detail::minus_kernel_sorted(tile[j], sorted, scratch);
      }
    };
    detail::reduce_over_chains(v, accumulate,
                               std::span<double>(out.data(), width));
    std::copy_n(out.begin(), width, sums.begin() + begin);
  }
  return sums;
}

// The chain shared by every permutation of a cardinality-based capacity.
std::vector<double> symmetric_knots(const Capacity& v) {
  if (!classify(v).cardinality_based) {
    throw Error(ErrorKind::domain, "capacity is not cardinality-based");
  }
  std::vector<double> knots(v.players() + 1);
  for (int i = 0; i <= v.players(); ++i) knots[i] = v[full_set(i)];
  std::sort(knots.begin(), knots.end());
  return knots;
}

double step_cdf(double y) { return y >= 0.0 ? 1.0 : 0.0; }

}  // namespace

bool is_point_mass(const Capacity& v) {
  return std::all_of(v.values().begin(), v.values().end(),
                     [](double x) { return x == 0.0; });
}

Support support(const Capacity& v) {
  const auto [lo, hi] = std::minmax_element(v.values().begin(), v.values().end());
  return {*lo, *hi};
}

std::vector<double> knot_values(const Capacity& v) {
  std::vector<double> knots(v.values().begin(), v.values().end());
  std::sort(knots.begin(), knots.end());
  knots.erase(std::unique(knots.begin(), knots.end()), knots.end());
  return knots;
}

double cdf_symmetric(const Capacity& v, double y) {
  const auto knots = symmetric_knots(v);
  ScratchBuffer scratch;
  return clamp01(detail::minus_kernel_sorted(y, knots, scratch));
}

double pdf_symmetric(const Capacity& v, double y) {
  const auto knots = symmetric_knots(v);
  ScratchBuffer scratch;
  const double m = v.players() *
                   detail::plus_kernels_sorted(y, knots, scratch).density;
  return std::max(0.0, m);
}

std::vector<double> cdf(const Capacity& v, std::span<const double> ys) {
  std::vector<double> result(ys.size());
  if (is_point_mass(v)) {
    std::transform(ys.begin(), ys.end(), result.begin(), step_cdf);
    return result;
  }
  if (classify(v).cardinality_based) {
    const auto knots = symmetric_knots(v);
#pragma omp parallel for
    for (std::ptrdiff_t j = 0; j < static_cast<std::ptrdiff_t>(ys.size());
         ++j) {
      ScratchBuffer scratch;
      result[j] = clamp01(detail::minus_kernel_sorted(ys[j], knots, scratch));
    }
    return result;
  }
  check_general(v);
  const auto sums = plus_chain_sums(v, ys);
  const double chains = factorial(v.players());
  for (std::size_t j = 0; j < ys.size(); ++j) {
    result[j] = clamp01(1.0 - sums.upper_tail[j] / chains);
  }
  return result;
}

double cdf(const Capacity& v, double y) {
  return cdf(v, std::span<const double>(&y, 1)).front();
}

double cdf_minus(const Capacity& v, double y) {
  check_general(v);
  const auto sums = minus_chain_sums(v, std::span<const double>(&y, 1));
  return clamp01(sums.front() / factorial(v.players()));
}

double pdf(const Capacity& v, double y) {
  if (is_point_mass(v)) return 0.0;
  if (classify(v).cardinality_based) return pdf_symmetric(v, y);
  check_general(v);
  const auto sums = plus_chain_sums(v, std::span<const double>(&y, 1));
  return std::max(0.0, sums.density.front() / factorial(v.players() - 1));
}

namespace {

std::vector<double> grid_points(const GridSpec& spec) {
  if (spec.points < 1 || spec.points > kMaxGridPoints) {
    throw Error(ErrorKind::limit, "grid point count must be in [1, 100000]");
  }
  if (!std::isfinite(spec.lo) || !std::isfinite(spec.hi)) {
    throw Error(ErrorKind::domain, "grid bounds must be finite");
  }
  if (spec.points == 1) {
    if (spec.lo != spec.hi) {
      throw Error(ErrorKind::domain, "a one-point grid needs lo == hi");
    }
    return {spec.lo};
  }
  if (!(spec.lo < spec.hi)) {
    throw Error(ErrorKind::domain, "grid needs lo < hi");
  }
  std::vector<double> ys(spec.points);
  const double step = (spec.hi - spec.lo) / static_cast<double>(spec.points - 1);
  for (std::size_t j = 0; j < spec.points; ++j) {
    ys[j] = spec.lo + step * static_cast<double>(j);
  }
  ys.back() = spec.hi;
  return ys;
}

void mark_knots(const Capacity& v, DistributionGrid& grid) {
  const auto knots = knot_values(v);
  grid.at_knot.resize(grid.y.size());
  for (std::size_t j = 0; j < grid.y.size(); ++j) {
    grid.at_knot[j] = std::binary_search(knots.begin(), knots.end(), grid.y[j]);
  }
}

}  // namespace

DistributionGrid distribution_grid(const Capacity& v, const GridSpec& spec) {
  DistributionGrid grid;
  grid.y = grid_points(spec);
  const std::size_t m = grid.y.size();
  grid.cdf.resize(m);
  grid.pdf.resize(m);
  mark_knots(v, grid);

  if (is_point_mass(v)) {
    grid.point_mass = true;
    std::transform(grid.y.begin(), grid.y.end(), grid.cdf.begin(), step_cdf);
    return grid;
  }

  if (classify(v).cardinality_based) {
    const auto knots = symmetric_knots(v);
    const double order = v.players();
#pragma omp parallel for
    for (std::ptrdiff_t j = 0; j < static_cast<std::ptrdiff_t>(m); ++j) {
      ScratchBuffer scratch;
      const double y = grid.y[j];
      grid.cdf[j] = clamp01(detail::minus_kernel_sorted(y, knots, scratch));
      grid.pdf[j] = std::max(
          0.0, order * detail::plus_kernels_sorted(y, knots, scratch).density);
    }
    return grid;
  }

  check_general(v);
  const auto sums = plus_chain_sums(v, grid.y);
  const double chains = factorial(v.players());
  const double density_scale = factorial(v.players() - 1);
  for (std::size_t j = 0; j < m; ++j) {
    grid.cdf[j] = clamp01(1.0 - sums.upper_tail[j] / chains);
    grid.pdf[j] = std::max(0.0, sums.density[j] / density_scale);
  }
  return grid;
}

double quantile(const Capacity& v, double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw Error(ErrorKind::domain, "probability must be in [0, 1]");
  }
  auto [lo, hi] = support(v);
  if (is_point_mass(v) || p == 0.0) return lo;
  while (hi - lo > 1e-10) {
    const double mid = 0.5 * (lo + hi);
    if (cdf(v, mid) >= p) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

double raw_moment(const Capacity& v, int r) {
  return detail::raw_moments_upto(v, r).back();
}

MomentTable moment_table(const Capacity& v, int order) {
  const auto raw = detail::raw_moments_upto(v, std::max(order, 2));
  MomentTable table;
  table.order = order;
  table.mean = raw[0];
  table.raw.assign(raw.begin(), raw.begin() + order);
  table.central.resize(order);
  const double mu = table.mean;
  const double variance = std::max(0.0, raw[1] - mu * mu);
  for (int r = 1; r <= order; ++r) {
    if (r <= 2) {
      table.central[r - 1] = r == 1 ? 0.0 : variance;
      continue;
    }
    // E[(Y - mu)^r] = sum_j C(r, j) E[Y^j] (-mu)^(r-j)
    double sum = 0.0;
    double binom = 1.0;
    for (int j = 0; j <= r; ++j) {
      const double moment = j == 0 ? 1.0 : raw[j - 1];
      sum += binom * moment * std::pow(-mu, r - j);
      binom = binom * (r - j) / (j + 1);
    }
    table.central[r - 1] = sum;
  }
  table.stddev = std::sqrt(variance);
  return table;
}

double expectation_functional(const Capacity& v, const Polynomial& g) {
  check_general(v);
  const int n = v.players();
  const int top = g.degree() - n;
  if (top < 0) return 0.0;
  if (top > 64) {
    throw Error(ErrorKind::limit, "polynomial degree exceeds n + 64");
  }
  const auto coeffs = g.coefficients();
  double total = 0.0;
  auto accumulate = [&](std::span<const double> knots,
                        std::span<double> partial) {
    // h_0..h_top of the chain knots, one pass
    std::array<double, 65> h{};
    h[0] = 1.0;
    for (double a : knots) {
      for (int k = 1; k <= top; ++k) h[k] += a * h[k - 1];
    }
    double sum = 0.0;
    for (int k = 0; k <= top; ++k) sum += coeffs[n + k] * h[k];
    partial[0] += sum;
  };
  detail::reduce_over_chains(v, accumulate, std::span<double>(&total, 1));
  return total;
}

}  // namespace choqdist
