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


// Acceptance driver: one PASS/FAIL line per criterion. Tolerances and
// workloads are fixed here and must not be tuned to make a line pass.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mmbox/boxdist/certificates.hpp"
#include "mmbox/boxdist/coupling.hpp"
#include "mmbox/boxdist/plan_search.hpp"
#include "mmbox/core/box_pair.hpp"
#include "mmbox/core/functions.hpp"
#include "mmbox/core/hausdorff.hpp"
#include "mmbox/modelgeom/bounds.hpp"
#include "mmbox/modelgeom/model_space.hpp"
#include "mmbox/samplers/samplers.hpp"
#include "oracles.hpp"

namespace {

using namespace mmbox;
using modelgeom::ModelKind;

constexpr double kPi = std::numbers::pi;

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

FiniteMMSpace uniform(const oracle::Matrix& d) {
  return FiniteMMSpace::uniform(DistanceMatrix::from_rows(d));
}

Outcome two_atom_formula() {
  const auto t0 = std::chrono::steady_clock::now();
  int cases = 0;
  double worst = 0.0;
  for (int i = 1; i <= 10; ++i) {
    for (int j = 1; j <= 10; ++j) {
      const double a = 0.1 * i;
      const double b = 0.1 * j;
      const double expected = std::min(std::abs(a - b), 0.5);
      const double box = boxdist::box_upper_plan_search(uniform({{0, a}, {a, 0}}),
                                                        uniform({{0, b}, {b, 0}}), 1.0,
                                                        boxdist::PlanSearch::exact)
                             .upper;
      const double oracle_value = oracle::two_atom_plan_box(a, b, 1.0);
      worst = std::max({worst, std::abs(box - expected), std::abs(oracle_value - expected)});
      ++cases;
    }
  }
  const double t = seconds_since(t0);
  return {worst <= 1e-12 && t < 5.0,
          fmt("%d pairs, max deviation %.3g (tol 1e-12), %.2f s (limit 5 s)", cases, worst, t)};
}

Outcome hausdorff_below_box() {
  const auto t0 = std::chrono::steady_clock::now();
  std::mt19937_64 rng(20260101);
  std::uniform_int_distribution<std::size_t> size(6, 10);
  std::uniform_real_distribution<double> lam(0.25, 4.0);
  int violations = 0;
  double worst = -oracle::kInf;
  const int cases = 200;
  for (int t = 0; t < cases; ++t) {
    const std::size_t n = size(rng);
    const SemiMetricPair pair(oracle::random_weights(rng, n),
                              DistanceMatrix::from_rows(oracle::random_cloud_distances(rng, n, 2)),
                              DistanceMatrix::from_rows(oracle::random_cloud_distances(rng, n, 3)));
    const double lambda = t % 2 == 0 ? 1.0 : lam(rng);
    const double h = hausdorff_lip1(pair, lambda, {.seed = static_cast<std::uint64_t>(t)}).upper;
    const double box = box_lambda_pair(pair, lambda, BoxMode::exact).upper;
    worst = std::max(worst, h - box);
    if (h > box + 1e-9) ++violations;
  }
  const double t = seconds_since(t0);
  return {violations == 0 && t < 60.0,
          fmt("%d pairs, %d violations, max(upper - box) %.3g, %.2f s (limit 60 s)", cases,
              violations, worst, t)};
}

Outcome hyouka_chain() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto s = modelgeom::hyouka_max_c(2, 10, 1.0, 1.0);
  const double K = oracle::hyouka_constant(2, 10, 1.0, 1.0);
  const auto feasible = [K](double c) { return std::pow(c, 8) <= (1 - c) * K; };
  const bool converged = feasible(s.c) && !feasible(s.c + 1e-9);
  const auto cert = boxdist::box_lower_volume_certificate(boxdist::BallVolumeFunction::sphere(10),
                                                          boxdist::BallVolumeFunction::sphere(2),
                                                          s.c, s.c);
  const double vx = oracle::sphere_ball_fraction(10, 2 * s.c);
  const double vy = oracle::sphere_ball_fraction(2, s.c / 2);
  const bool oracle_premise = vx + boxdist::kCertificateMargin <= (1 - s.c) * vy;
  const double t = seconds_since(t0);
  const bool pass = converged && s.slack >= -1e-9 && s.log_margin >= -1e-9 && cert.has_value() &&
                    cert->bound == s.c && oracle_premise && t < 1.0;
  return {pass, fmt("c* = %.12f, slack %.3g, bracket within 1e-9: %s, certificate: %s "
                    "(v_X %.6g <= %.6g), %.3f s (limit 1 s)",
                    s.c, s.slack, converged ? "yes" : "no", cert ? "pass" : "none", vx,
                    (1 - s.c) * vy, t)};
}

Outcome so_diameters() {
  int bracket_failures = 0;
  for (int n = 2; n <= 50; ++n) {
    const double d = modelgeom::so_diameter(n);
    // Squared comparison keeps the bracket endpoints integral.
    if (d * d < 4.0 * (n - 1) - 1e-12 || d * d > 4.0 * n + 1e-12) ++bracket_failures;
  }
  int exceed = 0;
  double worst_excess = -oracle::kInf;
  std::string reach;
  bool reach_ok = true;
  for (int n = 2; n <= 10; ++n) {
    samplers::SampleConfig cfg;
    cfg.kind = ModelKind::so;
    cfg.n = n;
    cfg.N = 2000;
    cfg.seed = static_cast<std::uint64_t>(1000 + n);
    const auto space = samplers::sample_space(cfg);
    double m = 0.0;
    for (std::size_t i = 0; i < space.size(); ++i)
      for (std::size_t j = i + 1; j < space.size(); ++j) m = std::max(m, space.distance(i, j));
    const double diam = modelgeom::so_diameter(n);
    worst_excess = std::max(worst_excess, m - diam);
    if (m > diam + 1e-9) ++exceed;
    if (n <= 3) {
      reach += fmt(" SO(%d) max/diam %.4f;", n, m / diam);
      if (m < 0.95 * diam) reach_ok = false;
    }
  }
  return {bracket_failures == 0 && exceed == 0 && reach_ok,
          fmt("bracket failures %d (n = 2..50), samples above diameter %d (max excess %.3g),",
              bracket_failures, exceed, worst_excess) +
              reach};
}

Outcome bound_tables() {
  const double a43 = modelgeom::asobisugi_bound(4, 3);
  const double a32 = modelgeom::asobisugi_bound(3, 2);
  const double a104 = modelgeom::asobisugi_bound(10, 4);
  const double o = modelgeom::oosawa_constant(1, 1, 1);
  const double k = modelgeom::kaotan_constant(1, 1, 1);
  const bool pass = a43 == 0.5 && a32 == 0.0 && a104 == 0.5 && o == 0.5 &&
                    std::abs(k - 1 / (2 * kPi)) <= 1e-12;
  return {pass, fmt("asobisugi(4,3)=%.17g (3,2)=%.17g (10,4)=%.17g oosawa=%.17g "
                    "kaotan=%.17g vs 1/(2pi)=%.17g",
                    a43, a32, a104, o, k, 1 / (2 * kPi))};
}

Outcome finite_k_convergence() {
  const double limit = modelgeom::kaotan_constant(2, 1, 1);
  std::vector<double> t;
  for (int k : {10, 100, 1000}) {
    t.push_back(
        modelgeom::kaotan_finite_k(2 * k, k, 2, 1, 1, k, modelgeom::KaotanFamily::sphere).threshold);
  }
  const bool increasing = t[0] < t[1] && t[1] < t[2];
  const double rel = std::abs(t[2] - limit) / limit;
  return {increasing && rel <= 0.05,
          fmt("thresholds k=10/100/1000: %.6f %.6f %.6f, increasing: %s; constant %.6f, "
              "relative gap at k=1000 %.3f (limit 0.05)",
              t[0], t[1], t[2], increasing ? "yes" : "no", limit, rel)};
}

Outcome sphere_concentration() {
  const auto t0 = std::chrono::steady_clock::now();
  bool pass = true;
  std::string detail;
  for (std::uint64_t seed : {1, 2, 3}) {
    std::vector<samplers::SampleConfig> configs;
    for (int n : {2, 8, 32, 128}) {
      samplers::SampleConfig cfg;
      cfg.kind = ModelKind::sphere;
      cfg.n = n;
      cfg.N = 3000;
      cfg.seed = seed;
      configs.push_back(cfg);
    }
    const auto curve = samplers::concentration_curve(configs, 0.1, {.seed = seed});
    const double ratio = curve.rows.back().value / curve.rows.front().value;
    pass = pass && curve.strictly_decreasing && ratio < 0.4;
    detail += fmt(" seed %llu: %.4f %.4f %.4f %.4f (ratio %.3f);",
                  static_cast<unsigned long long>(seed), curve.rows[0].value, curve.rows[1].value,
                  curve.rows[2].value, curve.rows[3].value, ratio);
  }
  const double t = seconds_since(t0);
  return {pass && t < 300.0, fmt("%.1f s (limit 300 s);", t) + detail};
}

Outcome hamming_exactness() {
  const int n = 10;
  samplers::SampleConfig cfg;
  cfg.kind = ModelKind::hamming;
  cfg.n = n;
  cfg.hamming_exhaustive = true;
  const auto space = samplers::sample_space(cfg);
  const RealFunction f = distance_function(space.dist(), 0);
  const auto nu = pushforward(space, f);

  // Lower median of Binomial(10, 1/2) / 10 from the exact cumulative law.
  int median_k = 0;
  while (oracle::binomial_mass(n, [median_k](int j) { return j <= median_k; }) < 0.5) ++median_k;
  const double center = median(nu);
  bool pass = center == median_k * (1.0 / n);

  double worst_tail = 0.0;
  for (int e = 1; e <= n; ++e) {
    const double eps = e * (1.0 / n);
    const double expected =
        oracle::binomial_mass(n, [&](int j) { return std::abs(j - median_k) >= e; });
    worst_tail = std::max(worst_tail, std::abs(levy_tail_mass(space, f, center, eps) - expected));
  }
  pass = pass && worst_tail <= 1e-12;

  int mismatches = 0;
  const std::vector<double> w(space.weights().begin(), space.weights().end());
  for (double kappa : {0.0, 0.001, 0.01, 0.05, 0.1, 0.2, 0.25, 0.3, 0.5, 0.75, 0.9, 0.99}) {
    if (partial_diameter(nu, kappa) != oracle::window_enumeration(f, w, kappa)) ++mismatches;
  }
  pass = pass && mismatches == 0;
  return {pass, fmt("median %.17g vs oracle %.17g, max tail deviation %.3g (tol 1e-12), "
                    "partial-diameter mismatches %d of 12",
                    center, median_k * (1.0 / n), worst_tail, mismatches)};
}

Outcome coupling_trend() {
  const auto t0 = std::chrono::steady_clock::now();
  std::vector<double> medians;
  std::string detail;
  for (int n : {4, 16, 64}) {
    std::vector<double> v;
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      v.push_back(boxdist::sphere_codim1_coupling_upper(n, 1000, 0.3, seed).upper);
    }
    std::sort(v.begin(), v.end());
    medians.push_back(v[2]);
    detail += fmt(" n=%d median %.4f;", n, v[2]);
  }
  const double t = seconds_since(t0);
  const bool pass = medians[0] > medians[1] && medians[1] > medians[2] && t < 300.0;
  return {pass, fmt("%.1f s (limit 300 s);", t) + detail};
}

Outcome property_suites() {
  constexpr int kCases = 500;
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<std::size_t> size(2, 10);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_real_distribution<double> lam(0.0, 5.0);

  int triangle = 0;
  for (int t = 0; t < kCases; ++t) {
    const std::size_t n = size(rng);
    const auto w = oracle::random_weights(rng, n, 0.5 + unit(rng));
    std::vector<double> f(n), g(n), h(n);
    for (std::size_t i = 0; i < n; ++i) {
      f[i] = unit(rng);
      g[i] = t % 3 == 0 ? f[i] : 2 * unit(rng);
      h[i] = unit(rng) - 0.5;
    }
    const double l = lam(rng);
    if (me_lambda(w, f, h, l) > me_lambda(w, f, g, l) + me_lambda(w, g, h, l) + 1e-9) ++triangle;
  }

  int monotone = 0;
  int above_one = 0;
  for (int t = 0; t < kCases; ++t) {
    const std::size_t n = size(rng);
    const SemiMetricPair pair(oracle::random_weights(rng, n),
                              DistanceMatrix::from_rows(oracle::random_semimetric(rng, n, 3.0)),
                              DistanceMatrix::from_rows(oracle::random_semimetric(rng, n, 3.0)));
    double l1 = lam(rng);
    double l2 = lam(rng);
    if (l1 > l2) std::swap(l1, l2);
    const double b1 = box_lambda_pair(pair, l1, BoxMode::exact).upper;
    const double b2 = box_lambda_pair(pair, l2, BoxMode::exact).upper;
    if (b2 > b1 + 1e-9) ++monotone;
    if (box_lambda_pair(pair, 1.0, BoxMode::exact).upper > 1.0 + 1e-9) ++above_one;
  }

  int partial = 0;
  for (int t = 0; t < kCases; ++t) {
    const std::size_t n = size(rng);
    const auto w = oracle::random_weights(rng, n, 0.5 + unit(rng));
    std::vector<double> f(n);
    for (auto& x : f) x = t % 4 == 0 ? std::round(4 * unit(rng)) : unit(rng);
    double k1 = unit(rng);
    double k2 = unit(rng);
    if (k1 > k2) std::swap(k1, k2);
    const auto nu = pushforward(w, f);
    if (partial_diameter(nu, k2) > partial_diameter(nu, k1) + 1e-12) ++partial;
  }

  const bool pass = triangle == 0 && monotone == 0 && partial == 0 && above_one == 0;
  return {pass, fmt("%d cases each; violations: me triangle %d, box monotone in lambda %d, "
                    "partial diameter monotone in kappa %d, probability box above 1 %d",
                    kCases, triangle, monotone, partial, above_one)};
}

struct Criterion {
  const char* name;
  std::function<Outcome()> run;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all = {
      {"two-atom box formula", two_atom_formula},
      {"Lipschitz-class Hausdorff distance below box value", hausdorff_below_box},
      {"hyouka chain for spheres (2, 10)", hyouka_chain},
      {"SO(n) diameters and Haar samples", so_diameters},
      {"bound tables", bound_tables},
      {"finite-k convergence of the sphere threshold", finite_k_convergence},
      {"sphere concentration curves", sphere_concentration},
      {"Hamming cube exactness", hamming_exactness},
      {"codimension-one coupling trend", coupling_trend},
      {"metric property suites", property_suites},
  };
  return all;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"mmbox acceptance criteria"};
  int only = 0;
  app.add_option("--criterion", only, "Run a single criterion (1-10)")
      ->check(CLI::Range(1, static_cast<int>(criteria().size())));
  CLI11_PARSE(app, argc, argv);

  int failures = 0;
  for (std::size_t i = 0; i < criteria().size(); ++i) {
    if (only != 0 && static_cast<int>(i) + 1 != only) continue;
    const auto& c = criteria()[i];
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("%s criterion %zu (%s): %s\n", o.pass ? "PASS" : "FAIL", i + 1, c.name,
                o.detail.c_str());
    std::fflush(stdout);
    if (!o.pass) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
