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
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace mmbox {

inline constexpr double kDefaultTolerance = 1e-9;

/// Square matrix of pairwise distances, stored row-major.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  explicit DistanceMatrix(std::size_t n, double fill = 0.0);
  DistanceMatrix(std::size_t n, std::vector<double> values);

  static DistanceMatrix from_rows(const std::vector<std::vector<double>>& rows);

  std::size_t size() const { return n_; }
  double operator()(std::size_t i, std::size_t j) const { return values_[i * n_ + j]; }
  double& operator()(std::size_t i, std::size_t j) { return values_[i * n_ + j]; }
  std::span<const double> row(std::size_t i) const {
    return {values_.data() + i * n_, n_};
  }
  const std::vector<double>& values() const { return values_; }

  /// Largest entry (0 for an empty matrix).
  double max() const;

  std::vector<std::vector<double>> to_rows() const;

  friend bool operator==(const DistanceMatrix&, const DistanceMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<double> values_;
};

/// Throws DimensionError/DomainError unless `d` is a finite, nonnegative,
/// symmetric matrix with zero diagonal. `what` names the matrix in messages.
void validate_semimetric(const DistanceMatrix& d, const char* what);

/// True when d(i,k) <= d(i,j) + d(j,k) + tol for every triple.
bool satisfies_triangle(const DistanceMatrix& d, double tol = kDefaultTolerance);

/// Where a sampled space came from. Carried through serialization.
struct Provenance {
  std::string kind;
  int n = 0;
  std::size_t sample_count = 0;
  std::uint64_t seed = 0;
  std::string metric;

  friend bool operator==(const Provenance&, const Provenance&) = default;
};

struct SpaceOptions {
  bool is_metric = false;
  /// Checking the triangle inequality is cubic; samplers that build
  /// metrics by construction switch it off.
  bool verify_triangle = true;
  double tolerance = kDefaultTolerance;
  std::string label;
  std::optional<Provenance> provenance;
};

/// Weighted atoms with a semimetric: the finite stand-in for an mm-space.
class FiniteMMSpace {
 public:
  FiniteMMSpace(std::vector<double> weights, DistanceMatrix dist, SpaceOptions options = {});

  /// Every atom gets mass 1/n.
  static FiniteMMSpace uniform(DistanceMatrix dist, SpaceOptions options = {});
  /// A single atom carrying `mass`.
  static FiniteMMSpace point(double mass = 1.0);

  std::size_t size() const { return weights_.size(); }
  std::span<const double> weights() const { return weights_; }
  double weight(std::size_t i) const { return weights_[i]; }
  double total_mass() const { return total_mass_; }
  const DistanceMatrix& dist() const { return dist_; }
  double distance(std::size_t i, std::size_t j) const { return dist_(i, j); }
  bool is_metric() const { return is_metric_; }
  const std::string& label() const { return label_; }
  const std::optional<Provenance>& provenance() const { return provenance_; }

  /// Same points and distances, every weight multiplied by `factor`.
  FiniteMMSpace with_scaled_mass(double factor) const;

 private:
  std::vector<double> weights_;
  DistanceMatrix dist_;
  double total_mass_ = 0.0;
  bool is_metric_ = false;
  std::string label_;
  std::optional<Provenance> provenance_;
};

/// Two semimetrics over one weighted atom set.
class SemiMetricPair {
 public:
  SemiMetricPair(std::vector<double> weights, DistanceMatrix d1, DistanceMatrix d2);

  std::size_t size() const { return weights_.size(); }
  std::span<const double> weights() const { return weights_; }
  double total_mass() const { return total_mass_; }
  const DistanceMatrix& d1() const { return d1_; }
  const DistanceMatrix& d2() const { return d2_; }

  /// |d1 - d2| entrywise.
  DistanceMatrix discrepancy() const;

 private:
  std::vector<double> weights_;
  DistanceMatrix d1_;
  DistanceMatrix d2_;
  double total_mass_ = 0.0;
};

/// One value per atom.
using RealFunction = std::vector<double>;

/// Finite atomic measure on the line; support strictly increasing.
struct RealMeasure1D {
  std::vector<double> support;
  std::vector<double> masses;

  double total_mass() const;
};

}  // namespace mmbox
