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

#include "mmbox/modelgeom/model_space.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "mmbox/error.hpp"
#include "mmbox/modelgeom/volumes.hpp"

namespace mmbox::modelgeom {

namespace {
constexpr double kPi = std::numbers::pi;
}

std::string_view to_string(ModelKind kind) {
  switch (kind) {
    case ModelKind::sphere:
      return "sphere";
    case ModelKind::cp:
      return "cp";
    case ModelKind::so:
      return "so";
    case ModelKind::hamming:
      return "hamming";
  }
  return "unknown";
}

ModelKind parse_model_kind(std::string_view text) {
  if (text == "sphere") return ModelKind::sphere;
  if (text == "cp") return ModelKind::cp;
  if (text == "so") return ModelKind::so;
  if (text == "hamming") return ModelKind::hamming;
  throw DomainError("unknown model space kind '" + std::string(text) + "'");
}

CpFacts cp_facts(int n) {
  if (n < 1) throw DomainError("cp_facts: n must be >= 1");
  CpFacts f;
  const double log_fact = std::lgamma(n + 1.0);
  f.volume = std::exp(n * std::log(kPi) - log_fact);
  f.a_cp = std::exp(std::lgamma(n + 0.5) - std::log(2.0 * std::sqrt(kPi)) - log_fact);
  f.sectional_lower = 1.0;
  f.diameter = kPi / 2;
  return f;
}

double so_diameter(int n) {
  if (n < 2) throw DomainError("so_diameter: n must be >= 2");
  // ||A - B||_F^2 = 2n - 2 tr(A^T B); the trace over SO(n) bottoms out at
  // -n (even n) or -(n - 2) (odd n, one eigenvalue stuck at 1).
  const int flips = n % 2 == 0 ? n : n - 1;
  return 2.0 * std::sqrt(static_cast<double>(flips));
}

double so_geodesic_diameter(int n) {
  if (n < 2) throw DomainError("so_geodesic_diameter: n must be >= 2");
  const int flips = n % 2 == 0 ? n : n - 1;
  return kPi * std::sqrt(static_cast<double>(flips));
}

double log_so_volume(int n) {
  if (n < 2) throw DomainError("log_so_volume: n must be >= 2");
  double acc = 0.25 * n * (n - 1) * std::log(2.0);
  for (int k = 2; k <= n; ++k) acc += log_sphere_volume(k - 1);
  return acc;
}

ModelSpaceSpec model_space_spec(ModelKind kind, int n) {
  ModelSpaceSpec s;
  s.kind = kind;
  s.n = n;
  switch (kind) {
    case ModelKind::sphere:
      if (n < 1) throw DomainError("sphere dimension must be >= 1");
      s.dimension = n;
      s.ricci_lower = n - 1.0;
      s.sectional_lower = 1.0;
      s.total_volume = sphere_total_volume(n);
      s.diameter = kPi;
      s.a_N = 1.0;
      s.diameter_homogeneous = true;  // antipodal map
      break;
    case ModelKind::cp: {
      const CpFacts f = cp_facts(n);
      s.dimension = 2 * n;
      s.ricci_lower = 2.0 * n - 1.0;  // sectional >= 1
      s.sectional_lower = f.sectional_lower;
      s.total_volume = f.volume;
      s.diameter = f.diameter;
      s.a_N = f.a_cp;
      // [z] -> [Jz] with J a quaternionic structure exists on C^{n+1} only
      // for even n + 1.
      s.diameter_homogeneous = n % 2 == 1;
      break;
    }
    case ModelKind::so: {
      if (n < 2) throw DomainError("SO(n) needs n >= 2");
      s.dimension = n * (n - 1) / 2;
      s.ricci_lower = (n - 1) / 4.0;
      s.sectional_lower = 0.0;
      const double log_vol = log_so_volume(n);
      s.total_volume = std::exp(log_vol);
      s.diameter = so_diameter(n);
      s.a_N = std::exp(log_vol - log_sphere_volume(s.dimension));
      s.diameter_homogeneous = true;  // A -> A A0^{-1} B0 is a left translation
      break;
    }
    case ModelKind::hamming:
      if (n < 1) throw DomainError("Hamming cube needs n >= 1");
      s.dimension = n;
      s.total_volume = std::ldexp(1.0, n);
      s.diameter = 1.0;
      s.diameter_homogeneous = true;  // bitwise complement
      break;
  }
  return s;
}

double hamming_distance(const std::vector<std::uint8_t>& x, const std::vector<std::uint8_t>& y) {
  if (x.size() != y.size()) throw DimensionError("hamming_distance: length mismatch");
  if (x.empty()) throw DimensionError("hamming_distance: empty vectors");
  std::size_t differ = 0;
  for (std::size_t i = 0; i < x.size(); ++i) differ += (x[i] != y[i]) ? 1 : 0;
  return static_cast<double>(differ) / static_cast<double>(x.size());
}

}  // namespace mmbox::modelgeom
