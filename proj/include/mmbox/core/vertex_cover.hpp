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

namespace mmbox {

/// Largest graph handled by the exact cover search.
inline constexpr std::size_t kMaxCoverVertices = 32;

struct VertexCover {
  double weight = 0.0;
  std::uint32_t members = 0;  // bit i set when vertex i is in the cover
};

/// Exact minimum-weight vertex cover by branch and bound. `adjacency[i]` is
/// the neighbour bitmask of vertex i. Branching picks the vertex of largest
/// uncovered degree, lowest index on ties, so the returned cover is
/// deterministic.
VertexCover min_weight_vertex_cover(std::span<const std::uint32_t> adjacency,
                                    std::span<const double> weights);

}  // namespace mmbox
