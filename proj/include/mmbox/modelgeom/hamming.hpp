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

#include "mmbox/core/mm_space.hpp"

namespace mmbox::modelgeom {

/// Law of the normalized distance to a fixed vertex of the uniform cube
/// {0,1}^n: mass C(n, k) 2^{-n} at k / n.
RealMeasure1D hamming_distance_law(int n);

/// Partial diameter of hamming_distance_law(n) at level kappa.
double hamming_distance_partial_diameter(int n, double kappa);

}  // namespace mmbox::modelgeom
