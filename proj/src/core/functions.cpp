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

#include "mmbox/core/functions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "mmbox/error.hpp"

namespace mmbox {

namespace {

void require_length(std::size_t got, std::size_t want, const char* what) {
  if (got != want) {
    throw DimensionError(std::string(what) + ": length " + std::to_string(got) + ", expected " +
                         std::to_string(want));
  }
}

}  // namespace

double me_lambda(std::span<const double> weights, std::span<const double> f,
                 std::span<const double> g, double lambda) {
  require_length(f.size(), weights.size(), "me_lambda f");
  require_length(g.size(), weights.size(), "me_lambda g");
  if (!(lambda >= 0.0)) throw DomainError("me_lambda: lambda must be nonnegative");

  // Only atoms with positive mass and positive deviation matter.
  std::vector<std::pair<double, double>> dev;
  dev.reserve(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    const double h = std::abs(f[i] - g[i]);
    if (weights[i] > 0.0 && h > 0.0) dev.emplace_back(h, weights[i]);
  }
  if (dev.empty()) return 0.0;
  std::sort(dev.begin(), dev.end());

  // Distinct deviation levels v_1 < ... < v_k and tail masses
  // M_j = mu(|f-g| >= v_j).
  std::vector<double> levels;
  std::vector<double> tails;
  {
    double tail = 0.0;
    for (auto it = dev.rbegin(); it != dev.rend(); ++it) {
      tail += it->second;
      if (levels.empty() || it->first != levels.back()) {
        levels.push_back(it->first);
        tails.push_back(tail);
      } else {
        tails.back() = tail;
      }
    }
    std::reverse(levels.begin(), levels.end());
    std::reverse(tails.begin(), tails.end());
  }
  if (lambda == 0.0) return levels.back();

  // On (v_{j}, v_{j+1}] the tail mass is constant M_{j+1}; the admissible
  // set is an up-set, so the first interval that meets it holds the infimum.
  double lo = 0.0;
  for (std::size_t j = 0; j < levels.size(); ++j) {
    const double candidate = std::max(lo, tails[j] / lambda);
    if (candidate <= levels[j]) return candidate;
    lo = levels[j];
  }
  return levels.back();
}

double me_lambda(const FiniteMMSpace& space, const RealFunction& f, const RealFunction& g,
                 double lambda) {
  return me_lambda(space.weights(), f, g, lambda);
}

RealMeasure1D pushforward(std::span<const double> weights, std::span<const double> f) {
  require_length(f.size(), weights.size(), "pushforward");
  std::vector<std::size_t> order(f.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return f[a] < f[b]; });
  RealMeasure1D nu;
  for (std::size_t i : order) {
    if (!std::isfinite(f[i])) throw DomainError("pushforward: non-finite function value");
    if (!nu.support.empty() && nu.support.back() == f[i]) {
      nu.masses.back() += weights[i];
    } else {
      nu.support.push_back(f[i]);
      nu.masses.push_back(weights[i]);
    }
  }
  return nu;
}

RealMeasure1D pushforward(const FiniteMMSpace& space, const RealFunction& f) {
  return pushforward(space.weights(), f);
}

namespace {

// Sliding window over sorted (value, mass) pairs.
template <class Value, class Mass>
double window_min_diameter(std::size_t n, Value value, Mass mass, double total, double kappa) {
  if (kappa >= total) return 0.0;
  const double need = total - kappa;
  const double slack = 1e-12 * std::max(1.0, total);
  double best = std::numeric_limits<double>::infinity();
  double held = 0.0;
  std::size_t right = 0;
  for (std::size_t left = 0; left < n; ++left) {
    while (right < n && held < need - slack) {
      held += mass(right);
      ++right;
    }
    if (held < need - slack) break;
    best = std::min(best, value(right - 1) - value(left));
    held -= mass(left);
  }
  return best;
}

}  // namespace

double partial_diameter(const RealMeasure1D& nu, double kappa) {
  if (!(kappa >= 0.0)) throw DomainError("partial_diameter: kappa must be nonnegative");
  require_length(nu.masses.size(), nu.support.size(), "partial_diameter masses");
  if (nu.support.empty()) return 0.0;
  return window_min_diameter(
      nu.support.size(), [&](std::size_t i) { return nu.support[i]; },
      [&](std::size_t i) { return nu.masses[i]; }, nu.total_mass(), kappa);
}

double partial_diameter_of(std::span<const double> values, std::span<const double> weights,
                           double kappa) {
  require_length(values.size(), weights.size(), "partial_diameter_of");
  if (!(kappa >= 0.0)) throw DomainError("partial_diameter: kappa must be nonnegative");
  std::vector<std::pair<double, double>> pts(values.size());
  double total = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    pts[i] = {values[i], weights[i]};
    total += weights[i];
  }
  std::sort(pts.begin(), pts.end());
  return window_min_diameter(
      pts.size(), [&](std::size_t i) { return pts[i].first; },
      [&](std::size_t i) { return pts[i].second; }, total, kappa);
}

double median(const RealMeasure1D& nu) {
  if (nu.support.empty()) throw DomainError("median of an empty measure");
  const double half = 0.5 * nu.total_mass();
  double acc = 0.0;
  for (std::size_t i = 0; i < nu.support.size(); ++i) {
    acc += nu.masses[i];
    if (acc >= half) return nu.support[i];
  }
  return nu.support.back();
}

double levy_tail_mass(const FiniteMMSpace& space, const RealFunction& f, double center, double eps,
                      double tol) {
  require_length(f.size(), space.size(), "levy_tail_mass");
  if (!(eps > 0.0)) throw DomainError("levy_tail_mass: eps must be positive");
  double mass = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (std::abs(f[i] - center) >= eps - tol) mass += space.weight(i);
  }
  return mass;
}

RealFunction lip1_regularize(const DistanceMatrix& dprime, std::span<const double> f,
                             std::span<const std::size_t> subset) {
  require_length(f.size(), dprime.size(), "lip1_regularize");
  if (subset.empty()) throw DomainError("lip1_regularize: subset must be nonempty");
  RealFunction out(f.size(), std::numeric_limits<double>::infinity());
  for (std::size_t x = 0; x < f.size(); ++x) {
    const auto row = dprime.row(x);
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t y : subset) {
      if (y >= f.size()) throw DimensionError("lip1_regularize: subset index out of range");
      best = std::min(best, f[y] + row[y]);
    }
    out[x] = best;
  }
  return out;
}

bool is_one_lipschitz(const DistanceMatrix& d, std::span<const double> f, double tol) {
  require_length(f.size(), d.size(), "is_one_lipschitz");
  for (std::size_t i = 0; i < f.size(); ++i) {
    for (std::size_t j = i + 1; j < f.size(); ++j) {
      if (std::abs(f[i] - f[j]) > d(i, j) + tol) return false;
    }
  }
  return true;
}

RealFunction distance_function(const DistanceMatrix& d, std::size_t x0) {
  if (x0 >= d.size()) throw DimensionError("distance_function: base point out of range");
  const auto row = d.row(x0);
  return RealFunction(row.begin(), row.end());
}

}  // namespace mmbox
