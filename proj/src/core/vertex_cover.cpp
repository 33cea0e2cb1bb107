// Copyright 2026 The mmbox Authors
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

#include "mmbox/core/vertex_cover.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <limits>

#include "mmbox/error.hpp"

namespace mmbox {

namespace {

class CoverSearch {
 public:
  CoverSearch(std::span<const std::uint32_t> adjacency, std::span<const double> weights)
      : adj_(adjacency), w_(weights), n_(adjacency.size()) {}

  VertexCover solve() {
    run(0, 0.0);
    return {best_weight_, best_members_};
  }

 private:
  // Greedy fractional edge packing on the still-uncovered edges: a valid
  // lower bound on the cover weight they need.
  double packing_bound(std::uint32_t cover) const {
    std::array<double, kMaxCoverVertices> residual{};
    for (std::size_t v = 0; v < n_; ++v) residual[v] = w_[v];
    double bound = 0.0;
    for (std::size_t u = 0; u < n_; ++u) {
      if (cover >> u & 1U) continue;
      std::uint32_t nbrs = adj_[u] & ~cover;
      nbrs &= ~((std::uint32_t{2} << u) - 1);  // v > u only
      while (nbrs != 0 && residual[u] > 0.0) {
        const int v = std::countr_zero(nbrs);
        nbrs &= nbrs - 1;
        const double delta = std::min(residual[u], residual[static_cast<std::size_t>(v)]);
        residual[u] -= delta;
        residual[static_cast<std::size_t>(v)] -= delta;
        bound += delta;
      }
    }
    return bound;
  }

  void run(std::uint32_t cover, double weight) {
    if (weight + packing_bound(cover) >= best_weight_) return;

    int pick = -1;
    int pick_degree = 0;
    for (std::size_t v = 0; v < n_; ++v) {
      if (cover >> v & 1U) continue;
      const int degree = std::popcount(adj_[v] & ~cover);
      if (degree > pick_degree) {
        pick_degree = degree;
        pick = static_cast<int>(v);
      }
    }
    if (pick < 0) {
      best_weight_ = weight;
      best_members_ = cover;
      return;
    }
    const auto v = static_cast<std::size_t>(pick);
    run(cover | (std::uint32_t{1} << v), weight + w_[v]);

    // v stays out: every uncovered neighbour must join.
    std::uint32_t forced = adj_[v] & ~cover;
    double added = 0.0;
    for (std::uint32_t m = forced; m != 0; m &= m - 1) {
      added += w_[static_cast<std::size_t>(std::countr_zero(m))];
    }
    run(cover | forced, weight + added);
  }

  std::span<const std::uint32_t> adj_;
  std::span<const double> w_;
  std::size_t n_;
  double best_weight_ = std::numeric_limits<double>::infinity();
  std::uint32_t best_members_ = 0;
};

}  // namespace

VertexCover min_weight_vertex_cover(std::span<const std::uint32_t> adjacency,
                                    std::span<const double> weights) {
  if (adjacency.size() != weights.size()) {
    throw DimensionError("vertex cover: adjacency and weights differ in length");
  }
  if (adjacency.size() > kMaxCoverVertices) {
    throw SizeError("vertex cover: exact search supports at most 32 vertices");
  }
  for (double w : weights) {
    if (!(w >= 0.0)) throw DomainError("vertex cover: weights must be nonnegative");
  }
  return CoverSearch(adjacency, weights).solve();
}

}  // namespace mmbox
