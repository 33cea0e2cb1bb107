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

#include "mmbox/modelgeom/hamming.hpp"

#include <cmath>

#include <boost/math/special_functions/binomial.hpp>

#include "mmbox/core/functions.hpp"
#include "mmbox/error.hpp"

namespace mmbox::modelgeom {

RealMeasure1D hamming_distance_law(int n) {
  if (n < 1) throw DomainError("hamming_distance_law: n must be >= 1");
  if (n > 1000) throw SizeError("hamming_distance_law: n must be <= 1000");
  RealMeasure1D law;
  for (int k = 0; k <= n; ++k) {
    law.support.push_back(k * (1.0 / n));
    const double c = boost::math::binomial_coefficient<double>(static_cast<unsigned>(n),
                                                               static_cast<unsigned>(k));
    law.masses.push_back(std::ldexp(c, -n));
  }
  return law;
}

double hamming_distance_partial_diameter(int n, double kappa) {
  return partial_diameter(hamming_distance_law(n), kappa);
}

}  // namespace mmbox::modelgeom
