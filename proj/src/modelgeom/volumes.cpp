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

#include "mmbox/modelgeom/volumes.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "mmbox/error.hpp"

namespace mmbox::modelgeom {

namespace {

constexpr double kPi = std::numbers::pi;

// log of int_0^pi sin^{n-1}(t) dt = vol(S^n) / vol(S^{n-1}).
double log_profile_mass(int n) { return log_sphere_volume(n) - log_sphere_volume(n - 1); }

double profile_integral(int n, double r) {
  using Quad = boost::math::quadrature::gauss_kronrod<double, 61>;
  const double power = static_cast<double>(n - 1);
  auto integrand = [power](double t) { return std::pow(std::sin(t), power); };
  // The profile concentrates near pi/2 as n grows; fixed panels keep the
  // adaptive rule from stepping over the peak.
  const int panels = std::max(1, static_cast<int>(std::ceil(r / (kPi / 32.0))));
  const double h = r / panels;
  double total = 0.0;
  for (int k = 0; k < panels; ++k) {
    total += Quad::integrate(integrand, k * h, (k + 1) * h, 4, 1e-13);
  }
  return total;
}

}  // namespace

double log_sphere_volume(int n) {
  if (n < 0) throw DomainError("sphere dimension must be nonnegative");
  const double half = 0.5 * (n + 1);
  return std::log(2.0) + half * std::log(kPi) - std::lgamma(half);
}

double sphere_total_volume(int n) {
  if (n < 1) throw DomainError("sphere_total_volume: n must be >= 1, got " + std::to_string(n));
  return std::exp(log_sphere_volume(n));
}

double sphere_ball_fraction(int n, double r) {
  if (n < 1) throw DomainError("sphere_ball_fraction: n must be >= 1");
  if (!(r >= 0.0 && r <= kPi)) {
    throw DomainError("sphere_ball_fraction: radius must lie in [0, pi]");
  }
  if (r == kPi) return 1.0;
  if (r == 0.0) return 0.0;
  if (n == 1) return r / kPi;
  const double v = profile_integral(n, r) / std::exp(log_profile_mass(n));
  return std::clamp(v, 0.0, 1.0);
}

double cp_ball_fraction(int n, double r) {
  if (n < 1) throw DomainError("cp_ball_fraction: n must be >= 1");
  if (!(r >= 0.0)) throw DomainError("cp_ball_fraction: radius must be nonnegative");
  if (r >= kPi / 2) return 1.0;
  return std::pow(std::sin(r), 2.0 * n);
}

double bishop_gromov_lower(int m, double kappa1, double r) {
  if (m < 1 || !(kappa1 > 0.0) || !(r >= 0.0)) {
    throw DomainError("bishop_gromov_lower: need m >= 1, kappa1 > 0, r >= 0");
  }
  const double scaled = r * std::sqrt(kappa1);
  if (scaled > kPi) throw DomainError("bishop_gromov_lower: r sqrt(kappa1) exceeds pi");
  return sphere_ball_fraction(m, scaled);
}

BishopUpper bishop_upper(int n, double kappa2, double a_N, double r) {
  if (n < 1 || !(kappa2 > 0.0) || !(a_N > 0.0) || !(r > 0.0)) {
    throw DomainError("bishop_upper: inputs must be positive");
  }
  BishopUpper out;
  const double scaled = r * std::sqrt(kappa2);
  if (scaled <= kPi) {
    out.exact = sphere_ball_fraction(n, scaled) / (a_N * std::pow(kappa2, 0.5 * n));
  }
  const double log_relaxed = n * std::log(r) + log_sphere_volume(n - 1) - std::log(n) -
                             std::log(a_N) - log_sphere_volume(n);
  out.relaxed = std::exp(log_relaxed);
  return out;
}

}  // namespace mmbox::modelgeom
