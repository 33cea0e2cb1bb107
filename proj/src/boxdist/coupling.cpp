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

#include "mmbox/boxdist/coupling.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "mmbox/core/mm_space.hpp"
#include "mmbox/error.hpp"
#include "mmbox/samplers/samplers.hpp"

namespace mmbox::boxdist {

namespace {

// Points of the big space, their distance to the equator, and the equator
// points they are paired with.
template <typename Vec>
struct Coupled {
  std::vector<Vec> big;
  std::vector<Vec> small;
  std::size_t band = 0;
  double max_equator_distance = 0.0;
};

template <typename Vec, typename SampleBig, typename SampleSmall>
Coupled<Vec> build(int n, std::size_t N, double eps, std::uint64_t seed, SampleBig sample_big,
                   SampleSmall sample_small) {
  Coupled<Vec> out;
  out.big.reserve(N);
  out.small.reserve(N);
  std::size_t fresh = 0;
  for (std::size_t i = 0; i < N; ++i) {
    Rng rng = make_rng(seed, i);
    Vec x;
    double head_norm = 0.0;
    do {  // the poles have no projection
      x = sample_big(rng);
      head_norm = x.head(n).norm();
    } while (head_norm == 0.0);
    const double to_equator = std::asin(std::min(1.0, std::abs(x[n])));
    out.max_equator_distance = std::max(out.max_equator_distance, to_equator);
    if (to_equator <= eps) {
      out.small.push_back(x.head(n) / head_norm);
      ++out.band;
    } else {
      Rng other = make_rng(derive_seed(seed, 1), fresh++);
      out.small.push_back(sample_small(other));
    }
    out.big.push_back(std::move(x));
  }
  return out;
}

template <typename Vec, typename Dist>
BoundReport score(const Coupled<Vec>& c, Dist dist, const HeuristicOptions& options) {
  const std::size_t N = c.big.size();
  DistanceMatrix d1(N);
  DistanceMatrix d2(N);
  for (std::size_t i = 0; i < N; ++i) {
    for (std::size_t j = i + 1; j < N; ++j) {
      d1(i, j) = d1(j, i) = dist(c.big[i], c.big[j]);
      d2(i, j) = d2(j, i) = dist(c.small[i], c.small[j]);
    }
  }
  std::vector<double> w(N, 1.0 / static_cast<double>(N));
  return box_lambda_pair(SemiMetricPair(std::move(w), std::move(d1), std::move(d2)), 1.0,
                         BoxMode::heuristic, options);
}

}  // namespace

BoundReport sphere_codim1_coupling_upper(int n, std::size_t N, double eps, std::uint64_t seed,
                                         CouplingFamily family, const HeuristicOptions& options) {
  if (n < 2) throw DomainError("codim-1 coupling needs n >= 2");
  if (N < 100) throw DomainError("codim-1 coupling needs N >= 100");
  if (N > samplers::kMaxDenseAtoms) {
    throw SizeError("codim-1 coupling sample exceeds the dense matrix cap");
  }
  if (!(eps > 0.0) || !std::isfinite(eps)) throw DomainError("codim-1 coupling needs eps > 0");

  BoundReport box;
  std::size_t band = 0;
  double max_eq = 0.0;
  if (family == CouplingFamily::sphere) {
    const auto c = build<Eigen::VectorXd>(
        n, N, eps, seed, [n](Rng& r) { return samplers::sample_sphere_point(n, r); },
        [n](Rng& r) { return samplers::sample_sphere_point(n - 1, r); });
    box = score(c, samplers::sphere_distance, options);
    band = c.band;
    max_eq = c.max_equator_distance;
  } else {
    const auto c = build<Eigen::VectorXcd>(
        n, N, eps, seed, [n](Rng& r) { return samplers::sample_cp_point(n, r); },
        [n](Rng& r) { return samplers::sample_cp_point(n - 1, r); });
    box = score(c, samplers::cp_distance, options);
    band = c.band;
    max_eq = c.max_equator_distance;
  }

  BoundReport report;
  report.lower = 0.0;
  report.upper = box.upper;
  report.retained = box.retained;
  report.methods = {"codim1-projection-coupling"};
  for (const auto& m : box.methods) report.methods.push_back(m);
  report.lower_witness = {{"kind", "trivial"}};
  report.upper_witness = {{"family", family == CouplingFamily::sphere ? "sphere" : "cp"},
                          {"n", n},
                          {"N", N},
                          {"eps", eps},
                          {"seed", seed},
                          {"band_count", band},
                          {"band_mass", static_cast<double>(band) / static_cast<double>(N)},
                          {"max_equator_distance", max_eq},
                          {"box", box.upper_witness}};
  return report;
}

}  // namespace mmbox::boxdist
