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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "mmbox/core/mm_space.hpp"
#include "mmbox/core/observable.hpp"
#include "mmbox/core/random.hpp"
#include "mmbox/modelgeom/model_space.hpp"

namespace mmbox::samplers {

using modelgeom::ModelKind;

enum class SoMetric { frobenius, geodesic };

/// Largest space for which a full distance matrix is built.
inline constexpr std::size_t kMaxDenseAtoms = 4096;
/// Largest cube whose vertices may be enumerated.
inline constexpr int kMaxExhaustiveHamming = 16;

struct SampleConfig {
  ModelKind kind = ModelKind::sphere;
  int n = 1;
  std::size_t N = 1;  // ignored for exhaustive Hamming cubes
  std::uint64_t seed = 0;
  SoMetric metric = SoMetric::frobenius;
  bool hamming_exhaustive = false;
};

/// Uniform probability space on N sampled points (or every vertex of an
/// exhaustive Hamming cube). Point i is drawn from stream i of the seed, so
/// the result does not depend on generation order.
FiniteMMSpace sample_space(const SampleConfig& cfg);

/// Uniform point of S^n as a unit vector of R^{n+1}.
Eigen::VectorXd sample_sphere_point(int n, Rng& rng);
/// Uniform point of CP^n as a unit representative in C^{n+1}.
Eigen::VectorXcd sample_cp_point(int n, Rng& rng);
/// Haar-distributed element of SO(n): QR of a Gaussian matrix with
/// positive diagonal in R, then one column negated if the determinant is -1.
Eigen::MatrixXd sample_haar_so(int n, Rng& rng);

/// arccos of the clamped inner product.
double sphere_distance(const Eigen::VectorXd& x, const Eigen::VectorXd& y);
/// Fubini-Study distance arccos|<z, w>|.
double cp_distance(const Eigen::VectorXcd& z, const Eigen::VectorXcd& w);
double so_distance(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b, SoMetric metric);

struct EmpiricalBallVolume {
  double r = 0.0;
  /// mu-average over centers of the mass within distance r.
  double mean = 0.0;
  /// mu-weighted variance of the per-center ball mass.
  double center_variance = 0.0;
};

/// Normalized ball mass at radius r averaged over all centers.
EmpiricalBallVolume empirical_ball_volume(const FiniteMMSpace& space, double r);

struct ConcentrationRow {
  SampleConfig config;
  std::size_t atoms = 0;
  double value = 0.0;  // observable diameter estimate
  std::size_t base_point = 0;
};

struct ConcentrationCurve {
  std::vector<ConcentrationRow> rows;
  /// Values strictly decrease along the input order.
  bool strictly_decreasing = true;
};

/// Samples every config and estimates its observable diameter at `kappa`
/// with a fixed strategy whose seed is derived from each config's seed.
ConcentrationCurve concentration_curve(const std::vector<SampleConfig>& configs, double kappa,
                                       const ObservableStrategy& strategy = {});

}  // namespace mmbox::samplers
