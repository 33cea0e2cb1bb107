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
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>

#include <json.hpp>

#include "mmbox/core/mm_space.hpp"
#include "mmbox/modelgeom/model_space.hpp"

namespace mmbox::boxdist {

struct BallVolumeProvenance {
  std::string kind;   // "closed-form" or "empirical"
  std::string model;  // sphere, cp, hamming, or the sampled space label
  int n = 0;
  std::size_t sample_size = 0;
  std::uint64_t seed = 0;
};

/// r -> normalized mass of a closed r-ball, for spaces whose ball masses
/// do not depend on the center.
class BallVolumeFunction {
 public:
  using Evaluator = std::function<double(double)>;

  BallVolumeFunction(Evaluator evaluator, double diameter, bool uniform,
                     BallVolumeProvenance provenance);

  static BallVolumeFunction sphere(int n);
  static BallVolumeFunction cp(int n);
  /// Normalized Hamming cube {0,1}^n: binomial cumulative mass.
  static BallVolumeFunction hamming(int n);
  /// Pooled average over all centers of a probability space. Uniformity
  /// is asserted by the caller; center_variance is the diagnostic.
  static BallVolumeFunction empirical(std::shared_ptr<const FiniteMMSpace> space,
                                      bool assert_uniform);

  /// 0 for r < 0, 1 for r >= diameter.
  double operator()(double r) const;
  double diameter() const { return diameter_; }
  bool uniform() const { return uniform_; }
  const BallVolumeProvenance& provenance() const { return provenance_; }
  /// Spread of the per-center ball mass; 0 for closed forms.
  double center_variance(double r) const;

 private:
  Evaluator evaluator_;
  double diameter_ = 0.0;
  bool uniform_ = false;
  BallVolumeProvenance provenance_;
  std::shared_ptr<const FiniteMMSpace> space_;
};

/// Premise slack required before a certificate is issued.
inline constexpr double kCertificateMargin = 1e-12;

struct VolumeCertificate {
  double bound = 0.0;  // certified lower bound on box_1(X, Y), equal to c
  double a = 0.0;
  double c = 0.0;
  double v_x = 0.0;  // v_X(a + c)
  double v_y = 0.0;  // v_Y(a / 2)
  double rhs = 0.0;  // (1 - c) v_Y(a / 2)
  bool swapped = false;  // roles of X and Y exchanged
  nlohmann::json witness() const;
};

/// Certificate box_1(X, Y) >= c from v_X(a + c) <= (1 - c) v_Y(a / 2) for
/// probability spaces with center-independent ball masses. Returns nullopt
/// when the premise fails.
std::optional<VolumeCertificate> box_lower_volume_certificate(const BallVolumeFunction& vX,
                                                              const BallVolumeFunction& vY,
                                                              double a, double c);

/// Best certificate over a grid of (a, c), trying both orders of the pair.
std::optional<VolumeCertificate> best_volume_certificate(const BallVolumeFunction& vX,
                                                         const BallVolumeFunction& vY,
                                                         std::span<const double> a_grid,
                                                         std::span<const double> c_grid);

/// min{1/2, |diam X - diam Y|}, a lower bound on box_1 for probability
/// spaces that each admit a measure-preserving self-map moving every point
/// by the diameter.
double box_lower_diameter_gap(const modelgeom::ModelSpaceSpec& X,
                              const modelgeom::ModelSpaceSpec& Y);

}  // namespace mmbox::boxdist
