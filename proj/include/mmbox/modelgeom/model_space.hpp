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

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace mmbox::modelgeom {

enum class ModelKind { sphere, cp, so, hamming };

std::string_view to_string(ModelKind kind);
/// Parses "sphere", "cp", "so" or "hamming"; throws DomainError otherwise.
ModelKind parse_model_kind(std::string_view text);

/// Closed-form attributes of a model space. Riemannian kinds carry the
/// curvature data used by the volume comparison bounds; the Hamming cube
/// only has a volume (point count) and a diameter.
struct ModelSpaceSpec {
  ModelKind kind = ModelKind::sphere;
  int n = 0;          // family parameter: S^n, CP^n, SO(n), {0,1}^n
  int dimension = 0;  // real dimension
  /// Ricci lower bound written as (dimension - 1) * kappa.
  std::optional<double> ricci_lower;
  std::optional<double> sectional_lower;
  double total_volume = 0.0;
  double diameter = 0.0;
  /// vol(N) / vol(S^dimension).
  std::optional<double> a_N;
  /// Admits a measure-preserving self-map moving every point by the
  /// diameter.
  bool diameter_homogeneous = false;
};

ModelSpaceSpec model_space_spec(ModelKind kind, int n);

struct CpFacts {
  double volume = 0.0;           // pi^n / n!
  double a_cp = 0.0;             // Gamma(n + 1/2) / (2 sqrt(pi) n!)
  double sectional_lower = 1.0;  // Fubini-Study, diameter pi/2 convention
  double diameter = 0.0;
};

CpFacts cp_facts(int n);

/// Diameter of SO(n) under the Frobenius (Hilbert-Schmidt) distance:
/// 2 sqrt(n) for even n, 2 sqrt(n - 1) for odd n.
double so_diameter(int n);

/// Diameter under the bi-invariant Riemannian distance ||log(A^T B)||_F.
/// Provided for comparison only; the certified bounds use so_diameter.
double so_geodesic_diameter(int n);

/// log of the Riemannian volume of SO(n) for the metric induced by the
/// Frobenius inner product: 2^{n(n-1)/4} prod_{k=2}^{n} vol(S^{k-1}).
double log_so_volume(int n);

/// Normalized Hamming distance between equal-length bit vectors.
double hamming_distance(const std::vector<std::uint8_t>& x, const std::vector<std::uint8_t>& y);

}  // namespace mmbox::modelgeom
