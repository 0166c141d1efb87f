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

#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace choqdist {

/// Characteristic vector of a subset of {1..n}: bit i-1 is set iff player i
/// belongs to the subset.
using Subset = std::uint32_t;

inline constexpr int kMaxPlayers = 20;

constexpr int cardinality(Subset s) noexcept { return std::popcount(s); }
constexpr Subset full_set(int n) noexcept { return (Subset{1} << n) - 1; }

/// Set function on all 2^n subsets of the player set, grounded at the empty
/// set. Immutable once constructed.
class Capacity {
 public:
  /// Takes ownership of a complete value table (size 2^n, index = Subset).
  /// Throws Error{limit} for n outside [1, 20], Error{dimension} for a table
  /// of the wrong size, Error{grounding} if values[0] != 0 and
  /// Error{domain} for non-finite entries.
  Capacity(int n, std::vector<double> values);

  int players() const noexcept { return n_; }
  std::size_t size() const noexcept { return values_.size(); }
  double operator[](Subset s) const { return values_[s]; }
  std::span<const double> values() const noexcept { return values_; }

 private:
  int n_;
  std::vector<double> values_;
};

/// Coefficients of the min-monomial expansion h(x) = sum_A m(A) min_{i in A} x_i.
class MoebiusRepresentation {
 public:
  MoebiusRepresentation(int n, std::vector<double> coeffs);

  int players() const noexcept { return n_; }
  double operator[](Subset s) const { return coeffs_[s]; }
  std::span<const double> coefficients() const noexcept { return coeffs_; }

 private:
  int n_;
  std::vector<double> coeffs_;
};

struct Classification {
  bool monotone = false;
  bool lattice_polynomial = false;
  bool cardinality_based = false;
  bool additive = false;
};

inline constexpr double kClassifyTolerance = 1e-12;

/// Parses the JSON capacity format:
///   { "n": 3, "values": { "1": 0.1, "1,2": 0.9, ... } }
/// Keys are strictly ascending comma-separated 1-based player lists; "" is the
/// empty set and may only carry 0. Every nonempty subset must be present.
Capacity load_capacity(std::string_view text);
Capacity load_capacity_file(const std::string& path);

/// Inverse of load_capacity. Values are written with 17 significant digits.
std::string dump_capacity(const Capacity& v);

/// Fast subset-sum Moebius inversion, O(n 2^n).
MoebiusRepresentation moebius_transform(const Capacity& v);

/// Subset-sum (zeta) transform; inverts moebius_transform.
Capacity zeta_transform(const MoebiusRepresentation& m);

Classification classify(const Capacity& v);

/// Values h_0, ..., h_n of v along the maximal chain generated by the
/// prefixes of sigma. sigma holds 0-based player indices and must be a
/// permutation of {0..n-1}; otherwise throws Error{domain}.
std::vector<double> knot_profile(const Capacity& v, std::span<const int> sigma);

/// Parses a subset key ("", "2", "1,3") for n players.
Subset parse_subset_key(std::string_view key, int n);
std::string subset_key(Subset s);

}  // namespace choqdist
