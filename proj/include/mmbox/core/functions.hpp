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

#include "mmbox/core/mm_space.hpp"

namespace mmbox {

/// Infimum of eps >= 0 such that the mass of {|f - g| >= eps} is at most
/// lambda * eps. With lambda = 0 this is the essential supremum of |f - g|.
double me_lambda(std::span<const double> weights, std::span<const double> f,
                 std::span<const double> g, double lambda);
double me_lambda(const FiniteMMSpace& space, const RealFunction& f, const RealFunction& g,
                 double lambda);

/// Image measure f_*(mu); equal values merge.
RealMeasure1D pushforward(std::span<const double> weights, std::span<const double> f);
RealMeasure1D pushforward(const FiniteMMSpace& space, const RealFunction& f);

/// Smallest diameter of a subset of the line keeping mass >= m - kappa.
/// Optimal subsets are contiguous runs of the sorted support, so a sliding
/// window finds the minimum.
double partial_diameter(const RealMeasure1D& nu, double kappa);

/// partial_diameter of the image of `weights` under `values`, without
/// building the merged measure.
double partial_diameter_of(std::span<const double> values, std::span<const double> weights,
                           double kappa);

/// Lower median: smallest support point whose cumulative mass reaches m/2.
double median(const RealMeasure1D& nu);

/// mu({x : |f(x) - center| >= eps}). Points within `tol` of the boundary
/// count as on it.
double levy_tail_mass(const FiniteMMSpace& space, const RealFunction& f, double center, double eps,
                      double tol = kDefaultTolerance);

/// f~(x) = min_{y in subset} f(y) + dprime(x, y).
RealFunction lip1_regularize(const DistanceMatrix& dprime, std::span<const double> f,
                             std::span<const std::size_t> subset);

bool is_one_lipschitz(const DistanceMatrix& d, std::span<const double> f,
                      double tol = kDefaultTolerance);

/// x -> d(x0, x).
RealFunction distance_function(const DistanceMatrix& d, std::size_t x0);

}  // namespace mmbox
