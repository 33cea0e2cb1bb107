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

#include <optional>

namespace mmbox::modelgeom {

/// log vol(S^n) = log(2 pi^{(n+1)/2} / Gamma((n+1)/2)); valid for n >= 0.
double log_sphere_volume(int n);

/// Total volume of the unit n-sphere, n >= 1.
double sphere_total_volume(int n);

/// Normalized measure of a closed geodesic ball of radius r in S^n,
/// 0 <= r <= pi. Adaptive Gauss-Kronrod on the sin^{n-1} profile.
double sphere_ball_fraction(int n, double r);

/// Normalized ball measure in CP^n with the Fubini-Study distance
/// arccos|<z, w>|: sin^{2n}(r) up to the diameter pi/2, then 1.
double cp_ball_fraction(int n, double r);

/// Volume fraction of an r-ball in a manifold of dimension m with
/// Ric >= (m - 1) kappa1, bounded below by the model sphere:
/// v_{S^m}(r sqrt(kappa1)). Requires r sqrt(kappa1) <= pi.
double bishop_gromov_lower(int m, double kappa1, double r);

struct BishopUpper {
  /// v_{S^n}(r sqrt(kappa2)) / (a_N kappa2^{n/2}); present when
  /// r sqrt(kappa2) <= pi.
  std::optional<double> exact;
  /// r^n vol(S^{n-1}) / (n a_N vol(S^n)), from sin t <= t. Valid for any r.
  double relaxed = 0.0;
};

/// Upper bounds on the r-ball fraction of an n-manifold N with
/// Ric >= (n - 1) kappa2 and vol(N) = a_N vol(S^n).
BishopUpper bishop_upper(int n, double kappa2, double a_N, double r);

}  // namespace mmbox::modelgeom
