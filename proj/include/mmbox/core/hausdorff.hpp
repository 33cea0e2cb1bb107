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
#include <span>

#include "mmbox/core/bound_report.hpp"
#include "mmbox/core/box_pair.hpp"
#include "mmbox/core/mm_space.hpp"

namespace mmbox {

struct HausdorffOptions {
  /// Random members of each Lipschitz class added to the distance functions.
  std::size_t random_functions = 16;
  std::uint64_t seed = 0;
  BoxMode mode = BoxMode::exact;
};

/// Lower bound on inf over g in Lip1(d) of me_lambda(f, g).
///
/// If me_lambda(f, g) < eps then off a set of mass <= lambda * eps every pair
/// satisfies |f(x) - f(y)| - d(x, y) < 2 eps. The bound is the box value of
/// the halved positive Lipschitz excess, so it is computed by the same cover
/// machinery as box_lambda_pair.
double lipschitz_class_gap(std::span<const double> weights, const DistanceMatrix& d,
                           std::span<const double> f, double lambda, BoxMode mode);

/// Hausdorff distance between Lip1(d1) and Lip1(d2) in the me_lambda metric.
///
/// `upper` is the largest me_lambda(f, f~) over a finite net of both classes,
/// where f~ regularizes f onto the other class over the box-optimal subset;
/// every such deviation is at most the box value. `lower` is the largest
/// lipschitz_class_gap over the same net, a certified lower bound. Both
/// semimetrics must satisfy the triangle inequality.
BoundReport hausdorff_lip1(const SemiMetricPair& pair, double lambda,
                           const HausdorffOptions& options = {});

}  // namespace mmbox
