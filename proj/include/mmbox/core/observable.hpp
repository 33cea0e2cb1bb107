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

#pragma once

#include <cstddef>
#include <cstdint>

#include "mmbox/core/mm_space.hpp"

namespace mmbox {

struct ObservableStrategy {
  std::uint64_t seed = 0;
  /// Single-coordinate proposals after the distance-function sweep.
  std::size_t ascent_iterations = 200;
  /// Base points tried for d(x0, .); 0 means every atom.
  std::size_t max_base_points = 0;
};

struct ObservableResult {
  double value = 0.0;
  RealFunction witness;
  std::size_t base_point = 0;
  std::size_t accepted_moves = 0;
};

/// Best-found lower estimate of the observable diameter
/// sup { partial_diameter(f_* mu, kappa) : f 1-Lipschitz }, with the
/// 1-Lipschitz function that attains it. Never claimed to be the supremum.
///
/// The sweep evaluates every distance function (negation does not change a
/// partial diameter), then coordinate ascent perturbs one value at a time and
/// re-projects onto the Lipschitz cone with the inf-convolution
/// min_y f(y) + d(x, y). Spaces not flagged metric are searched under their
/// shortest-path closure, which has the same 1-Lipschitz functions.
ObservableResult observable_diameter(const FiniteMMSpace& space, double kappa,
                                     const ObservableStrategy& strategy = {});

/// Shortest-path closure of a semimetric (Floyd-Warshall).
DistanceMatrix path_metric(const DistanceMatrix& d);

}  // namespace mmbox
