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

#include "mmbox/core/bound_report.hpp"
#include "mmbox/core/box_pair.hpp"

namespace mmbox::boxdist {

enum class CouplingFamily { sphere, cp };

/// Empirical upper bound on box_1 between S^n and its equator S^{n-1}
/// (or CP^n and CP^{n-1}). N points of the big space are sampled; those
/// within distance eps of the equator are paired with their projection
/// onto it, the rest with fresh uniform equator samples. The resulting
/// bijection is scored with the heuristic box.
BoundReport sphere_codim1_coupling_upper(int n, std::size_t N, double eps, std::uint64_t seed,
                                         CouplingFamily family = CouplingFamily::sphere,
                                         const HeuristicOptions& options = {});

}  // namespace mmbox::boxdist
