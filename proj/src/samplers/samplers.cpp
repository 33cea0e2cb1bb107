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

#include "mmbox/samplers/samplers.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "mmbox/error.hpp"

namespace mmbox::samplers {

namespace {

double clamped_acos(double v) { return std::acos(std::clamp(v, -1.0, 1.0)); }

// Fills a symmetric matrix from a pair distance; the diagonal stays 0.
template <typename Dist>
DistanceMatrix pairwise(std::size_t count, Dist&& dist) {
  DistanceMatrix d(count);
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = i + 1; j < count; ++j) {
      const double v = dist(i, j);
      d(i, j) = v;
      d(j, i) = v;
    }
  }
  return d;
}

FiniteMMSpace hamming_space(const SampleConfig& cfg, SpaceOptions opts) {
  const int n = cfg.n;
  const double scale = 1.0 / n;
  if (cfg.hamming_exhaustive) {
    if (n > kMaxExhaustiveHamming) {
      throw SizeError("exhaustive Hamming cube limited to n <= " +
                      std::to_string(kMaxExhaustiveHamming));
    }
    const std::size_t count = std::size_t{1} << n;
    if (count > kMaxDenseAtoms) {
      throw SizeError("Hamming cube with " + std::to_string(count) +
                      " vertices exceeds the dense matrix cap of " +
                      std::to_string(kMaxDenseAtoms) + " atoms");
    }
    opts.provenance->sample_count = count;
    auto d = pairwise(count, [&](std::size_t i, std::size_t j) {
      return std::popcount(static_cast<std::uint64_t>(i ^ j)) * scale;
    });
    return FiniteMMSpace::uniform(std::move(d), std::move(opts));
  }
  std::vector<std::vector<std::uint8_t>> pts(cfg.N);
  for (std::size_t i = 0; i < cfg.N; ++i) {
    Rng rng = make_rng(cfg.seed, i);
    std::bernoulli_distribution bit(0.5);
    pts[i].resize(static_cast<std::size_t>(n));
    for (auto& b : pts[i]) b = bit(rng) ? 1 : 0;
  }
  auto d = pairwise(cfg.N, [&](std::size_t i, std::size_t j) {
    return modelgeom::hamming_distance(pts[i], pts[j]);
  });
  return FiniteMMSpace::uniform(std::move(d), std::move(opts));
}

}  // namespace

Eigen::VectorXd sample_sphere_point(int n, Rng& rng) {
  std::normal_distribution<double> gauss;
  Eigen::VectorXd v(n + 1);
  double norm = 0.0;
  do {
    for (int k = 0; k <= n; ++k) v[k] = gauss(rng);
    norm = v.norm();
  } while (norm == 0.0);
  return v / norm;
}

Eigen::VectorXcd sample_cp_point(int n, Rng& rng) {
  std::normal_distribution<double> gauss;
  Eigen::VectorXcd z(n + 1);
  double norm = 0.0;
  do {
    for (int k = 0; k <= n; ++k) {
      const double re = gauss(rng);
      const double im = gauss(rng);
      z[k] = {re, im};
    }
    norm = z.norm();
  } while (norm == 0.0);
  return z / norm;
}

Eigen::MatrixXd sample_haar_so(int n, Rng& rng) {
  std::normal_distribution<double> gauss;
  Eigen::MatrixXd g(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) g(i, j) = gauss(rng);
  }
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(g);
  Eigen::MatrixXd q = qr.householderQ();
  const Eigen::MatrixXd& r = qr.matrixQR();
  for (int k = 0; k < n; ++k) {
    if (r(k, k) < 0.0) q.col(k) = -q.col(k);
  }
  if (q.determinant() < 0.0) q.col(0) = -q.col(0);
  return q;
}

double sphere_distance(const Eigen::VectorXd& x, const Eigen::VectorXd& y) {
  return clamped_acos(x.dot(y));
}

double cp_distance(const Eigen::VectorXcd& z, const Eigen::VectorXcd& w) {
  return clamped_acos(std::abs(z.dot(w)));
}

double so_distance(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b, SoMetric metric) {
  if (metric == SoMetric::frobenius) return (a - b).norm();
  // ||log(a^T b)||_F: the eigenvalues of a rotation are e^{+-i theta} (and
  // 1), so the squared norm of the logarithm is the sum of squared angles.
  const Eigen::MatrixXd rel = a.transpose() * b;
  Eigen::EigenSolver<Eigen::MatrixXd> es(rel, false);
  double acc = 0.0;
  for (const auto& lam : es.eigenvalues()) {
    const double theta = std::abs(std::arg(lam));
    acc += theta * theta;
  }
  return std::sqrt(acc);
}

FiniteMMSpace sample_space(const SampleConfig& cfg) {
  if (cfg.n < 1) throw DomainError("sample_space: n must be >= 1");
  if (cfg.kind == ModelKind::so && cfg.n < 2) throw DomainError("sample_space: SO(n) needs n >= 2");
  const bool exhaustive = cfg.kind == ModelKind::hamming && cfg.hamming_exhaustive;
  if (!exhaustive) {
    if (cfg.N < 1) throw DomainError("sample_space: N must be >= 1");
    if (cfg.N > kMaxDenseAtoms) {
      throw SizeError("sample size " + std::to_string(cfg.N) + " exceeds the dense matrix cap of " +
                      std::to_string(kMaxDenseAtoms) + " atoms");
    }
  }

  SpaceOptions opts;
  opts.is_metric = true;
  opts.verify_triangle = false;
  Provenance prov;
  prov.kind = std::string(modelgeom::to_string(cfg.kind));
  prov.n = cfg.n;
  prov.sample_count = cfg.N;
  prov.seed = cfg.seed;
  if (cfg.kind == ModelKind::so) {
    prov.metric = cfg.metric == SoMetric::frobenius ? "frobenius" : "geodesic";
  } else if (exhaustive) {
    prov.metric = "exhaustive";
  }
  opts.label = prov.kind + "(" + std::to_string(cfg.n) + ")";
  opts.provenance = prov;

  switch (cfg.kind) {
    case ModelKind::sphere: {
      std::vector<Eigen::VectorXd> pts;
      pts.reserve(cfg.N);
      for (std::size_t i = 0; i < cfg.N; ++i) {
        Rng rng = make_rng(cfg.seed, i);
        pts.push_back(sample_sphere_point(cfg.n, rng));
      }
      auto d = pairwise(cfg.N, [&](std::size_t i, std::size_t j) {
        return sphere_distance(pts[i], pts[j]);
      });
      return FiniteMMSpace::uniform(std::move(d), std::move(opts));
    }
    case ModelKind::cp: {
      std::vector<Eigen::VectorXcd> pts;
      pts.reserve(cfg.N);
      for (std::size_t i = 0; i < cfg.N; ++i) {
        Rng rng = make_rng(cfg.seed, i);
        pts.push_back(sample_cp_point(cfg.n, rng));
      }
      auto d = pairwise(cfg.N, [&](std::size_t i, std::size_t j) {
        return cp_distance(pts[i], pts[j]);
      });
      return FiniteMMSpace::uniform(std::move(d), std::move(opts));
    }
    case ModelKind::so: {
      std::vector<Eigen::MatrixXd> pts;
      pts.reserve(cfg.N);
      for (std::size_t i = 0; i < cfg.N; ++i) {
        Rng rng = make_rng(cfg.seed, i);
        pts.push_back(sample_haar_so(cfg.n, rng));
      }
      auto d = pairwise(cfg.N, [&](std::size_t i, std::size_t j) {
        return so_distance(pts[i], pts[j], cfg.metric);
      });
      return FiniteMMSpace::uniform(std::move(d), std::move(opts));
    }
    case ModelKind::hamming:
      return hamming_space(cfg, std::move(opts));
  }
  throw DomainError("sample_space: unknown kind");
}

EmpiricalBallVolume empirical_ball_volume(const FiniteMMSpace& space, double r) {
  EmpiricalBallVolume out;
  out.r = r;
  const std::size_t n = space.size();
  const double m = space.total_mass();
  std::vector<double> per_center(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const auto row = space.dist().row(i);
    double acc = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      if (row[j] <= r) acc += space.weight(j);
    }
    per_center[i] = acc / m;
  }
  for (std::size_t i = 0; i < n; ++i) out.mean += space.weight(i) * per_center[i];
  out.mean /= m;
  for (std::size_t i = 0; i < n; ++i) {
    const double dev = per_center[i] - out.mean;
    out.center_variance += space.weight(i) * dev * dev;
  }
  out.center_variance /= m;
  out.mean = std::min(out.mean, 1.0);
  return out;
}

ConcentrationCurve concentration_curve(const std::vector<SampleConfig>& configs, double kappa,
                                       const ObservableStrategy& strategy) {
  if (!(kappa > 0.0)) throw DomainError("concentration_curve: kappa must be positive");
  ConcentrationCurve curve;
  for (const auto& cfg : configs) {
    const FiniteMMSpace space = sample_space(cfg);
    ObservableStrategy s = strategy;
    s.seed = derive_seed(cfg.seed, 0x6f6273ULL);
    const ObservableResult res = observable_diameter(space, kappa, s);
    ConcentrationRow row;
    row.config = cfg;
    row.atoms = space.size();
    row.value = res.value;
    row.base_point = res.base_point;
    if (!curve.rows.empty() && !(row.value < curve.rows.back().value)) {
      curve.strictly_decreasing = false;
    }
    curve.rows.push_back(std::move(row));
  }
  return curve;
}

}  // namespace mmbox::samplers
