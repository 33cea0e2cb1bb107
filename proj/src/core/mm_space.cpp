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

#include "mmbox/core/mm_space.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "mmbox/error.hpp"

namespace mmbox {

DistanceMatrix::DistanceMatrix(std::size_t n, double fill) : n_(n), values_(n * n, fill) {}

DistanceMatrix::DistanceMatrix(std::size_t n, std::vector<double> values)
    : n_(n), values_(std::move(values)) {
  if (values_.size() != n * n) {
    throw DimensionError("distance matrix: expected " + std::to_string(n * n) + " entries, got " +
                         std::to_string(values_.size()));
  }
}

DistanceMatrix DistanceMatrix::from_rows(const std::vector<std::vector<double>>& rows) {
  const std::size_t n = rows.size();
  std::vector<double> values;
  values.reserve(n * n);
  for (const auto& r : rows) {
    if (r.size() != n) throw DimensionError("distance matrix rows must have length " + std::to_string(n));
    values.insert(values.end(), r.begin(), r.end());
  }
  return DistanceMatrix(n, std::move(values));
}

double DistanceMatrix::max() const {
  return values_.empty() ? 0.0 : *std::max_element(values_.begin(), values_.end());
}

std::vector<std::vector<double>> DistanceMatrix::to_rows() const {
  std::vector<std::vector<double>> rows(n_);
  for (std::size_t i = 0; i < n_; ++i) rows[i].assign(row(i).begin(), row(i).end());
  return rows;
}

void validate_semimetric(const DistanceMatrix& d, const char* what) {
  const std::size_t n = d.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (d(i, i) != 0.0) {
      throw DomainError(std::string(what) + ": nonzero diagonal at " + std::to_string(i));
    }
    for (std::size_t j = i + 1; j < n; ++j) {
      const double a = d(i, j);
      const double b = d(j, i);
      if (!std::isfinite(a) || !std::isfinite(b) || a < 0.0 || b < 0.0) {
        throw DomainError(std::string(what) + ": entries must be finite and nonnegative");
      }
      if (a != b) {
        throw DomainError(std::string(what) + ": not symmetric at (" + std::to_string(i) + "," +
                          std::to_string(j) + ")");
      }
    }
  }
}

bool satisfies_triangle(const DistanceMatrix& d, double tol) {
  const std::size_t n = d.size();
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      const double dij = d(i, j);
      for (std::size_t k = 0; k < n; ++k) {
        if (d(i, k) > dij + d(j, k) + tol) return false;
      }
    }
  }
  return true;
}

namespace {

double checked_total(std::span<const double> weights) {
  double total = 0.0;
  for (double w : weights) {
    if (!std::isfinite(w) || w < 0.0) throw DomainError("weights must be finite and nonnegative");
    total += w;
  }
  if (!(total > 0.0)) throw DomainError("total mass must be positive");
  return total;
}

}  // namespace

FiniteMMSpace::FiniteMMSpace(std::vector<double> weights, DistanceMatrix dist, SpaceOptions options)
    : weights_(std::move(weights)),
      dist_(std::move(dist)),
      is_metric_(options.is_metric),
      label_(std::move(options.label)),
      provenance_(std::move(options.provenance)) {
  if (weights_.empty()) throw DimensionError("an mm-space needs at least one atom");
  if (dist_.size() != weights_.size()) {
    throw DimensionError("distance matrix size " + std::to_string(dist_.size()) +
                         " does not match atom count " + std::to_string(weights_.size()));
  }
  total_mass_ = checked_total(weights_);
  validate_semimetric(dist_, "dist");
  if (is_metric_ && options.verify_triangle && !satisfies_triangle(dist_, options.tolerance)) {
    throw DomainError("space flagged as metric violates the triangle inequality");
  }
}

FiniteMMSpace FiniteMMSpace::uniform(DistanceMatrix dist, SpaceOptions options) {
  const std::size_t n = dist.size();
  if (n == 0) throw DimensionError("an mm-space needs at least one atom");
  return FiniteMMSpace(std::vector<double>(n, 1.0 / static_cast<double>(n)), std::move(dist),
                       std::move(options));
}

FiniteMMSpace FiniteMMSpace::point(double mass) {
  SpaceOptions opts;
  opts.is_metric = true;
  opts.label = "point";
  return FiniteMMSpace({mass}, DistanceMatrix(1), std::move(opts));
}

FiniteMMSpace FiniteMMSpace::with_scaled_mass(double factor) const {
  if (!(factor > 0.0) || !std::isfinite(factor)) throw DomainError("mass scale must be positive");
  FiniteMMSpace out = *this;
  for (double& w : out.weights_) w *= factor;
  out.total_mass_ = std::accumulate(out.weights_.begin(), out.weights_.end(), 0.0);
  return out;
}

SemiMetricPair::SemiMetricPair(std::vector<double> weights, DistanceMatrix d1, DistanceMatrix d2)
    : weights_(std::move(weights)), d1_(std::move(d1)), d2_(std::move(d2)) {
  if (weights_.empty()) throw DimensionError("a semimetric pair needs at least one atom");
  if (d1_.size() != weights_.size() || d2_.size() != weights_.size()) {
    throw DimensionError("semimetric pair: matrix sizes must match the atom count");
  }
  total_mass_ = checked_total(weights_);
  validate_semimetric(d1_, "d1");
  validate_semimetric(d2_, "d2");
}

DistanceMatrix SemiMetricPair::discrepancy() const {
  const std::size_t n = size();
  std::vector<double> values(n * n);
  const auto& a = d1_.values();
  const auto& b = d2_.values();
  for (std::size_t k = 0; k < values.size(); ++k) values[k] = std::abs(a[k] - b[k]);
  return DistanceMatrix(n, std::move(values));
}

double RealMeasure1D::total_mass() const {
  return std::accumulate(masses.begin(), masses.end(), 0.0);
}

}  // namespace mmbox
