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
#include <span>

#include "mmbox/core/bound_report.hpp"
#include "mmbox/core/mm_space.hpp"

namespace mmbox {

enum class BoxMode { exact, heuristic };

/// Exact mode enumerates vertex covers over at most this many atoms.
inline constexpr std::size_t kExactBoxAtoms = 16;

struct HeuristicOptions {
  /// Number of discrepancy thresholds probed on the first pass.
  std::size_t grid = 48;
  /// Number of zoom-in passes around the best threshold.
  int refine_passes = 2;
};

/// Box value for an arbitrary nonnegative symmetric "discrepancy" matrix:
/// the infimum of eps such that some atom subset T with removed mass at most
/// lambda * eps has disc(x, y) <= eps for all x, y in T.
///
/// Exact mode binary-searches the sorted discrepancy levels; feasibility at
/// a level is an exact minimum-weight vertex cover of the conflict graph
/// (edges where disc exceeds the level). Heuristic mode uses greedy covers
/// for the upper side and fractional edge packings for the lower side.
BoundReport box_lambda_discrepancy(std::span<const double> weights, const DistanceMatrix& disc,
                                   double lambda, BoxMode mode,
                                   const HeuristicOptions& options = {});

/// Box distance between the two semimetrics of `pair` at level lambda.
BoundReport box_lambda_pair(const SemiMetricPair& pair, double lambda, BoxMode mode,
                            const HeuristicOptions& options = {});

}  // namespace mmbox
