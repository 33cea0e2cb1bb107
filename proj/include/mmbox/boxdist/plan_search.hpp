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
#include <vector>

#include <json.hpp>

#include "mmbox/core/bound_report.hpp"
#include "mmbox/core/box_pair.hpp"
#include "mmbox/core/mm_space.hpp"

namespace mmbox::boxdist {

/// Coupling of two atomic measures; only positive cells are stored.
struct TransportPlan {
  struct Cell {
    std::size_t source = 0;
    std::size_t target = 0;
    double mass = 0.0;
  };
  std::vector<Cell> cells;
};

/// Marginal tolerance, scaled by max(1, total mass).
inline constexpr double kPlanTolerance = 1e-12;

/// Throws PreconditionError unless every cell is positive and in range and
/// the row and column sums match the given weights.
void validate_plan(const TransportPlan& plan, std::span<const double> source_weights,
                   std::span<const double> target_weights, double tol = kPlanTolerance);

/// Cell-level pair: cells (i, j) and (k, l) are compared through
/// d_X(i, k) against d_Y(j, l).
SemiMetricPair plan_pair(const FiniteMMSpace& X, const FiniteMMSpace& Y, const TransportPlan& plan);

nlohmann::json plan_to_json(const TransportPlan& plan);

struct NormalizedPair {
  FiniteMMSpace X;
  FiniteMMSpace Y;
  double additive_term = 0.0;
};

/// Rescales Y to the total mass of X. Requires m(X) <= m(Y); the returned
/// term m(Y) - m(X) is added to any box value of the rescaled pair.
NormalizedPair normalize_masses(const FiniteMMSpace& X, const FiniteMMSpace& Y);

enum class PlanSearch { exact, local, seeded_restart };

struct PlanSearchOptions {
  std::uint64_t seed = 0;
  /// Random starts for seeded-restart search.
  std::size_t restarts = 8;
  /// Box evaluations allowed per local descent.
  std::size_t max_evaluations = 4000;
  /// Exact search splits every atom into this many equal parts and
  /// enumerates the bijections of the split spaces as integer tables.
  int refinement = 1;
  /// Tables with larger support are skipped.
  std::size_t max_cells = kExactBoxAtoms;
  /// Used for plans with more than kExactBoxAtoms cells.
  HeuristicOptions heuristic;
};

/// Largest side for exhaustive bijection search.
inline constexpr std::size_t kExactPlanAtoms = 8;

/// Upper bound on the box distance from the best plan found. Every plan is
/// realized by a pair of parameters, so any plan gives an upper bound.
/// Requires equal total masses.
///
/// exact: all bijections (integer tables with row and column sums
///   `refinement`) for uniform spaces of equal size <= 8.
/// local: 2-swap descent on bijections when both spaces are uniform of
///   equal size, followed by pivot descent on transportation-polytope
///   vertices starting from the northwest corner.
/// seeded_restart: local descent from random starts whose seeds are
///   derived from options.seed; eligible instances also include the exact
///   bijection optimum.
BoundReport box_upper_plan_search(const FiniteMMSpace& X, const FiniteMMSpace& Y, double lambda,
                                  PlanSearch search, const PlanSearchOptions& options = {});

/// normalize_masses (ordering the pair by mass) followed by plan search;
/// the additive term is applied to both sides of the report.
BoundReport box_upper(const FiniteMMSpace& X, const FiniteMMSpace& Y, double lambda,
                      PlanSearch search, const PlanSearchOptions& options = {});

}  // namespace mmbox::boxdist
