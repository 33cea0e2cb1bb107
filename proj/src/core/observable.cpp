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

#include "mmbox/core/observable.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "mmbox/core/functions.hpp"
#include "mmbox/core/random.hpp"
#include "mmbox/error.hpp"

namespace mmbox {

DistanceMatrix path_metric(const DistanceMatrix& d) {
  DistanceMatrix out = d;
  const std::size_t n = d.size();
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      const double dik = out(i, k);
      for (std::size_t j = 0; j < n; ++j) {
        const double via = dik + out(k, j);
        if (via < out(i, j)) out(i, j) = via;
      }
    }
  }
  return out;
}

ObservableResult observable_diameter(const FiniteMMSpace& space, double kappa,
                                     const ObservableStrategy& strategy) {
  if (!(kappa > 0.0)) throw DomainError("observable_diameter: kappa must be positive");
  const std::size_t n = space.size();
  const auto weights = space.weights();
  const DistanceMatrix closure = space.is_metric() ? DistanceMatrix{} : path_metric(space.dist());
  const DistanceMatrix& d = space.is_metric() ? space.dist() : closure;

  Rng rng = make_rng(strategy.seed, 0);

  std::vector<std::size_t> bases(n);
  std::iota(bases.begin(), bases.end(), std::size_t{0});
  if (strategy.max_base_points > 0 && strategy.max_base_points < n) {
    std::shuffle(bases.begin(), bases.end(), rng);
    bases.resize(strategy.max_base_points);
    std::sort(bases.begin(), bases.end());
  }

  ObservableResult best;
  best.value = -1.0;
  for (std::size_t x0 : bases) {
    const double v = partial_diameter_of(d.row(x0), weights, kappa);
    if (v > best.value) {
      best.value = v;
      best.base_point = x0;
    }
  }
  best.witness = distance_function(d, best.base_point);
  if (n < 2 || strategy.ascent_iterations == 0) return best;

  RealFunction f = best.witness;
  RealFunction g(n);
  std::uniform_int_distribution<std::size_t> pick_atom(0, n - 1);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  for (std::size_t it = 0; it < strategy.ascent_iterations; ++it) {
    const auto [lo, hi] = std::minmax_element(f.begin(), f.end());
    const double spread = *hi - *lo;
    if (spread <= 0.0) break;
    const std::size_t i = pick_atom(rng);
    const double proposal = f[i] + 0.5 * spread * unit(rng);

    // f is already 1-Lipschitz, so the inf-convolution of the perturbed
    // function only changes through the new value at i.
    const auto row = d.row(i);
    double cap = proposal;
    for (std::size_t y = 0; y < n; ++y) {
      if (y == i) continue;
      g[y] = std::min(f[y], proposal + row[y]);
      cap = std::min(cap, f[y] + row[y]);
    }
    g[i] = cap;

    const double v = partial_diameter_of(g, weights, kappa);
    if (v > best.value) {
      best.value = v;
      f.swap(g);
      ++best.accepted_moves;
    }
  }
  best.witness = std::move(f);
  return best;
}

}  // namespace mmbox
