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

#include "mmbox/boxdist/certificates.hpp"

#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

#include <boost/math/special_functions/binomial.hpp>

#include "mmbox/error.hpp"
#include "mmbox/modelgeom/volumes.hpp"
#include "mmbox/samplers/samplers.hpp"

namespace mmbox::boxdist {

BallVolumeFunction::BallVolumeFunction(Evaluator evaluator, double diameter, bool uniform,
                                       BallVolumeProvenance provenance)
    : evaluator_(std::move(evaluator)), diameter_(diameter), uniform_(uniform),
      provenance_(std::move(provenance)) {
  if (!evaluator_) throw DomainError("ball volume function needs an evaluator");
  if (!(diameter_ >= 0.0)) throw DomainError("ball volume diameter must be nonnegative");
}

BallVolumeFunction BallVolumeFunction::sphere(int n) {
  if (n < 1) throw DomainError("sphere ball volume needs n >= 1");
  return {[n](double r) { return modelgeom::sphere_ball_fraction(n, r); },
          modelgeom::model_space_spec(modelgeom::ModelKind::sphere, n).diameter, true,
          {"closed-form", "sphere", n, 0, 0}};
}

BallVolumeFunction BallVolumeFunction::cp(int n) {
  if (n < 1) throw DomainError("CP ball volume needs n >= 1");
  return {[n](double r) { return modelgeom::cp_ball_fraction(n, r); }, modelgeom::cp_facts(n).diameter,
          true, {"closed-form", "cp", n, 0, 0}};
}

BallVolumeFunction BallVolumeFunction::hamming(int n) {
  if (n < 1) throw DomainError("Hamming ball volume needs n >= 1");
  return {[n](double r) {
            // Distances are k / n; count k <= r n with a rounding guard.
            const int kmax = std::min(n, static_cast<int>(std::floor(r * n + 1e-9)));
            double acc = 0.0;
            for (int k = 0; k <= kmax; ++k) {
              acc += boost::math::binomial_coefficient<double>(static_cast<unsigned>(n),
                                                               static_cast<unsigned>(k));
            }
            return std::ldexp(acc, -n);
          },
          1.0, true, {"closed-form", "hamming", n, 0, 0}};
}

BallVolumeFunction BallVolumeFunction::empirical(std::shared_ptr<const FiniteMMSpace> space,
                                                 bool assert_uniform) {
  if (!space) throw DomainError("empirical ball volume needs a space");
  if (std::abs(space->total_mass() - 1.0) > 1e-12) {
    throw PreconditionError("empirical ball volume needs a probability space");
  }
  BallVolumeProvenance prov{"empirical", space->label(), 0, space->size(), 0};
  if (const auto& p = space->provenance()) {
    prov.model = p->kind;
    prov.n = p->n;
    prov.seed = p->seed;
  }
  // The pooled ball mass is the mass of ordered pairs within distance r, so
  // one sorted list of pair distances answers every radius.
  const std::size_t n = space->size();
  std::vector<std::pair<double, double>> pairs;
  pairs.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      pairs.emplace_back(space->distance(i, j), space->weight(i) * space->weight(j));
    }
  }
  std::sort(pairs.begin(), pairs.end());
  auto dists = std::make_shared<std::vector<double>>();
  auto cumulative = std::make_shared<std::vector<double>>();
  dists->reserve(pairs.size());
  cumulative->reserve(pairs.size());
  double acc = 0.0;
  for (const auto& [d, w] : pairs) {
    acc += w;
    dists->push_back(d);
    cumulative->push_back(acc);
  }
  BallVolumeFunction f(
      [dists, cumulative](double r) {
        const auto it = std::upper_bound(dists->begin(), dists->end(), r);
        if (it == dists->begin()) return 0.0;
        return (*cumulative)[static_cast<std::size_t>(it - dists->begin()) - 1];
      },
      space->dist().max(), assert_uniform, std::move(prov));
  f.space_ = std::move(space);
  return f;
}

double BallVolumeFunction::operator()(double r) const {
  if (r < 0.0) return 0.0;
  if (r >= diameter_) return 1.0;
  return std::clamp(evaluator_(r), 0.0, 1.0);
}

double BallVolumeFunction::center_variance(double r) const {
  if (!space_) return 0.0;
  return samplers::empirical_ball_volume(*space_, r).center_variance;
}

nlohmann::json VolumeCertificate::witness() const {
  return {{"kind", "volume-comparison"}, {"bound", bound}, {"a", a},     {"c", c},
          {"v_x_at_a_plus_c", v_x},      {"v_y_at_half_a", v_y}, {"rhs", rhs},
          {"swapped", swapped}};
}

std::optional<VolumeCertificate> box_lower_volume_certificate(const BallVolumeFunction& vX,
                                                              const BallVolumeFunction& vY,
                                                              double a, double c) {
  if (!(c > 0.0 && c < 1.0)) throw DomainError("volume certificate needs 0 < c < 1");
  if (!(a > 0.0) || !std::isfinite(a)) throw DomainError("volume certificate needs a > 0");
  if (!vX.uniform() || !vY.uniform()) {
    throw PreconditionError("volume certificate needs uniformly distributed spaces");
  }
  VolumeCertificate cert;
  cert.a = a;
  cert.c = c;
  cert.v_x = vX(a + c);
  cert.v_y = vY(0.5 * a);
  cert.rhs = (1.0 - c) * cert.v_y;
  if (!(cert.v_x + kCertificateMargin <= cert.rhs)) return std::nullopt;
  cert.bound = c;
  return cert;
}

std::optional<VolumeCertificate> best_volume_certificate(const BallVolumeFunction& vX,
                                                         const BallVolumeFunction& vY,
                                                         std::span<const double> a_grid,
                                                         std::span<const double> c_grid) {
  std::optional<VolumeCertificate> best;
  for (const auto* pair : {&vX, &vY}) {
    const BallVolumeFunction& first = *pair;
    const BallVolumeFunction& second = pair == &vX ? vY : vX;
    for (double a : a_grid) {
      for (double c : c_grid) {
        if (best && c <= best->bound) continue;
        auto cert = box_lower_volume_certificate(first, second, a, c);
        if (cert) {
          cert->swapped = pair != &vX;
          best = cert;
        }
      }
    }
  }
  return best;
}

double box_lower_diameter_gap(const modelgeom::ModelSpaceSpec& X,
                              const modelgeom::ModelSpaceSpec& Y) {
  if (!X.diameter_homogeneous || !Y.diameter_homogeneous) {
    throw UnsupportedError("diameter-gap certificate needs diameter-homogeneous spaces");
  }
  return std::min(0.5, std::abs(X.diameter - Y.diameter));
}

}  // namespace mmbox::boxdist
