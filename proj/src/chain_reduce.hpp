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

// Enumeration of the n! maximal chains of a capacity and deterministic
// parallel reduction over them. Private to the library sources.

#include <algorithm>
#include <array>
#include <span>
#include <vector>

#include "choqdist/capacity.hpp"
#include "choqdist/parallel.hpp"

namespace choqdist::detail {

inline constexpr int kMaxChainPlayers = 10;

/// Chains are grouped by their first two players; this block layout depends
/// only on n, never on the thread count.
inline int block_prefix_length(int n) { return std::min(n, 2); }

inline std::size_t block_count(int n) {
  std::size_t count = 1;
  for (int i = 0; i < block_prefix_length(n); ++i) count *= n - i;
  return count;
}

/// Walks every chain whose permutation starts with the block's prefix, in
/// lexicographic order of the permutation. `visit` receives the knot values
/// h_0..h_n in chain order.
template <class Visit>
class ChainWalker {
 public:
  ChainWalker(const Capacity& v, Visit& visit)
      : v_(v), n_(v.players()), visit_(visit) {}

  void walk_block(std::size_t block) {
    const int prefix = block_prefix_length(n_);
    // mixed-radix decode: digit i selects among the n-i unused players
    std::array<int, 2> digits{};
    for (int i = prefix - 1; i >= 0; --i) {
      digits[i] = static_cast<int>(block % (n_ - i));
      block /= (n_ - i);
    }
    Subset mask = 0;
    knots_[0] = 0.0;
    for (int i = 0; i < prefix; ++i) {
      int remaining = digits[i];
      for (int p = 0; p < n_; ++p) {
        if (mask & (Subset{1} << p)) continue;
        if (remaining-- == 0) {
          mask |= Subset{1} << p;
          break;
        }
      }
      knots_[i + 1] = v_[mask];
    }
    descend(prefix, mask);
  }

 private:
  void descend(int depth, Subset mask) {
    if (depth == n_) {
      visit_(std::span<const double>(knots_.data(), n_ + 1));
      return;
    }
    for (int p = 0; p < n_; ++p) {
      const Subset bit = Subset{1} << p;
      if (mask & bit) continue;
      knots_[depth + 1] = v_[mask | bit];
      descend(depth + 1, mask | bit);
    }
  }

  const Capacity& v_;
  int n_;
  Visit& visit_;
  std::array<double, kMaxChainPlayers + 1> knots_{};
};

/// out[j] = sum over all chains of the contributions that `accumulate`
/// adds into slot j. `accumulate(knots, partial)` is called once per chain
/// with a block-private partial of out.size() slots. Blocks run in parallel;
/// the per-slot block totals are combined pairwise in block order.
template <class Accumulate>
void reduce_over_chains(const Capacity& v, Accumulate&& accumulate,
                        std::span<double> out) {
  const std::size_t width = out.size();
  const std::size_t blocks = block_count(v.players());
  std::vector<double> partials(blocks * width, 0.0);

#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t b = 0; b < static_cast<std::ptrdiff_t>(blocks); ++b) {
    std::span<double> partial(partials.data() + b * width, width);
    auto visit = [&](std::span<const double> knots) {
      accumulate(knots, partial);
    };
    ChainWalker<decltype(visit)> walker(v, visit);
    walker.walk_block(static_cast<std::size_t>(b));
  }

  std::vector<double> column(blocks);
  for (std::size_t j = 0; j < width; ++j) {
    for (std::size_t b = 0; b < blocks; ++b) column[b] = partials[b * width + j];
    out[j] = pairwise_sum(column);
  }
}

}  // namespace choqdist::detail
