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


#include <gtest/gtest.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <memory>
#include <random>

#include "mmbox/boxdist/certificates.hpp"
#include "mmbox/boxdist/coupling.hpp"
#include "mmbox/boxdist/plan_search.hpp"
#include "mmbox/core/box_pair.hpp"
#include "mmbox/error.hpp"
#include "mmbox/modelgeom/bounds.hpp"
#include "mmbox/modelgeom/model_space.hpp"
#include "mmbox/samplers/samplers.hpp"
#include "oracles.hpp"

namespace mmbox::boxdist {
namespace {

using modelgeom::ModelKind;

FiniteMMSpace uniform(const oracle::Matrix& d) {
  return FiniteMMSpace::uniform(DistanceMatrix::from_rows(d));
}

oracle::Matrix rows(const DistanceMatrix& d, std::size_t n) {
  oracle::Matrix m(n, std::vector<double>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = d(i, j);
  return m;
}

// Cycle graph metric scaled to diameter `scale`: every ball volume is
// independent of its center.
oracle::Matrix cycle(std::size_t k, double scale) {
  oracle::Matrix d(k, std::vector<double>(k));
  const double half = static_cast<double>(k / 2);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      const std::size_t g = i > j ? i - j : j - i;
      d[i][j] = scale * static_cast<double>(std::min(g, k - g)) / half;
    }
  }
  return d;
}

TEST(NormalizeMasses, Examples) {
  const auto d = DistanceMatrix::from_rows({{0, 1}, {1, 0}});
  const FiniteMMSpace X({0.25, 0.25}, d);
  const FiniteMMSpace Y({0.25, 0.5}, d);
  const auto np = normalize_masses(X, Y);
  EXPECT_NEAR(np.Y.weight(0), 0.25 * 2.0 / 3.0, 1e-15);
  EXPECT_NEAR(np.Y.weight(1), 0.5 * 2.0 / 3.0, 1e-15);
  EXPECT_NEAR(np.additive_term, 0.25, 1e-15);
  EXPECT_EQ(np.Y.distance(0, 1), 1.0);

  const auto same = normalize_masses(X, X);
  EXPECT_EQ(same.additive_term, 0.0);
  EXPECT_EQ(same.Y.weight(1), 0.25);

  const auto doubled = normalize_masses(FiniteMMSpace::point(1.0), FiniteMMSpace::point(2.0));
  EXPECT_EQ(doubled.Y.weight(0), 1.0);
  EXPECT_EQ(doubled.additive_term, 1.0);

  EXPECT_THROW(normalize_masses(Y, X), PreconditionError);
}

TEST(PlanSearch, IdenticalSpacesGiveZero) {
  std::mt19937_64 rng(1);
  const auto X = uniform(oracle::random_cloud_distances(rng, 6, 2));
  for (auto s : {PlanSearch::exact, PlanSearch::local, PlanSearch::seeded_restart}) {
    EXPECT_NEAR(box_upper_plan_search(X, X, 1.0, s).upper, 0.0, 1e-12);
  }
}

TEST(PlanSearch, TwoAtomFormulaAgainstPlanOracle) {
  for (double a : {0.1, 0.4, 1.0}) {
    for (double b : {0.2, 0.4, 0.9}) {
      const auto X = uniform({{0, a}, {a, 0}});
      const auto Y = uniform({{0, b}, {b, 0}});
      const double expected = std::min(std::abs(a - b), 0.5);
      EXPECT_NEAR(oracle::two_atom_plan_box(a, b, 1.0), expected, 1e-12);
      for (auto s : {PlanSearch::exact, PlanSearch::local, PlanSearch::seeded_restart}) {
        EXPECT_NEAR(box_upper_plan_search(X, Y, 1.0, s).upper, expected, 1e-12) << a << " " << b;
      }
    }
  }
}

TEST(PlanSearch, OnePointTargetForcesThePlan) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 20; ++t) {
    const auto w = oracle::random_weights(rng, 5);
    const auto d = oracle::random_cloud_distances(rng, 5, 2);
    const FiniteMMSpace X(w, DistanceMatrix::from_rows(d));
    const oracle::Matrix zero(5, std::vector<double>(5, 0.0));
    const double expected = oracle::brute_force_box(w, d, zero, 1.0);
    const auto r = box_upper_plan_search(X, FiniteMMSpace::point(1.0), 1.0, PlanSearch::local);
    EXPECT_NEAR(r.upper, expected, 1e-12);
    EXPECT_EQ(r.upper_witness["plan"].size(), 5U);
  }
}

TEST(PlanSearch, ExactMatchesBijectionOracleAndIsSymmetric) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 500; ++t) {
    const std::size_t n = 3 + t % 3;
    const auto dx = oracle::random_cloud_distances(rng, n, 2);
    const auto dy = oracle::random_cloud_distances(rng, n, 3);
    const auto X = uniform(dx);
    const auto Y = uniform(dy);
    const double xy = box_upper_plan_search(X, Y, 1.0, PlanSearch::exact).upper;
    const double yx = box_upper_plan_search(Y, X, 1.0, PlanSearch::exact).upper;
    EXPECT_NEAR(xy, oracle::bijection_box(dx, dy, 1.0), 1e-12);
    EXPECT_NEAR(xy, yx, 1e-9);
    const double seeded = box_upper_plan_search(X, Y, 1.0, PlanSearch::seeded_restart,
                                                {.seed = static_cast<std::uint64_t>(t)})
                              .upper;
    EXPECT_LE(seeded, xy + 1e-12);
  }
}

TEST(PlanSearch, RefinementNeverHurts) {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 5; ++t) {
    const auto X = uniform(oracle::random_cloud_distances(rng, 3, 2));
    const auto Y = uniform(oracle::random_cloud_distances(rng, 3, 2));
    PlanSearchOptions opt;
    const double r1 = box_upper_plan_search(X, Y, 1.0, PlanSearch::exact, opt).upper;
    opt.refinement = 2;
    const auto r2 = box_upper_plan_search(X, Y, 1.0, PlanSearch::exact, opt);
    EXPECT_LE(r2.upper, r1 + 1e-12);
    EXPECT_NO_THROW(validate_plan(
        TransportPlan{[&] {
          std::vector<TransportPlan::Cell> cells;
          for (const auto& c : r2.upper_witness["plan"])
            cells.push_back({c[0], c[1], c[2]});
          return cells;
        }()},
        X.weights(), Y.weights()));
  }
}

TEST(PlanSearch, ProbabilityUpperAtMostOne) {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 500; ++t) {
    const std::size_t nx = 2 + t % 7;
    const std::size_t ny = 1 + t % 5;
    const FiniteMMSpace X(oracle::random_weights(rng, nx),
                          DistanceMatrix::from_rows(oracle::random_semimetric(rng, nx, 5.0)));
    const FiniteMMSpace Y(oracle::random_weights(rng, ny),
                          DistanceMatrix::from_rows(oracle::random_semimetric(rng, ny, 5.0)));
    const auto r = box_upper(X, Y, 1.0, PlanSearch::seeded_restart, {.seed = 4});
    EXPECT_LE(r.upper, 1.0 + 1e-9);
    EXPECT_GE(r.upper, r.lower - 1e-9);
  }
}

TEST(PlanSearch, Errors) {
  std::mt19937_64 rng(2);
  const auto nine = uniform(oracle::random_semimetric(rng, 9));
  EXPECT_THROW(box_upper_plan_search(nine, nine, 1.0, PlanSearch::exact), SizeError);
  const auto three = uniform(oracle::random_semimetric(rng, 3));
  const auto four = uniform(oracle::random_semimetric(rng, 4));
  EXPECT_THROW(box_upper_plan_search(three, four, 1.0, PlanSearch::exact), PreconditionError);
  const FiniteMMSpace skew({0.2, 0.8}, DistanceMatrix::from_rows({{0, 1}, {1, 0}}));
  EXPECT_THROW(box_upper_plan_search(skew, skew, 1.0, PlanSearch::exact), PreconditionError);
  EXPECT_THROW(box_upper_plan_search(three, FiniteMMSpace::point(2.0), 1.0, PlanSearch::local),
               PreconditionError);
}

TEST(BoxUpper, AdditiveTermIsExact) {
  const auto d = DistanceMatrix::from_rows({{0, 0.7}, {0.7, 0}});
  const FiniteMMSpace X({0.5, 0.5}, d);
  const FiniteMMSpace Y({1.0, 1.0}, DistanceMatrix::from_rows({{0, 0.2}, {0.2, 0}}));
  const auto scaled = box_upper_plan_search(X, normalize_masses(X, Y).Y, 1.0, PlanSearch::exact);
  const auto r = box_upper(X, Y, 1.0, PlanSearch::exact);
  EXPECT_EQ(r.upper, scaled.upper + 1.0);
  EXPECT_EQ(r.upper_witness["additive_term"], 1.0);
  const auto swapped = box_upper(Y, X, 1.0, PlanSearch::exact);
  EXPECT_EQ(swapped.upper, r.upper);
  EXPECT_TRUE(swapped.upper_witness["swapped"].get<bool>());
}

TEST(BoxUpper, AdditiveTermProperty) {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> mass(0.2, 3.0);
  for (int t = 0; t < 500; ++t) {
    const std::size_t nx = 1 + t % 4;
    const std::size_t ny = 1 + (t / 4) % 4;
    const FiniteMMSpace X(oracle::random_weights(rng, nx, mass(rng)),
                          DistanceMatrix::from_rows(oracle::random_semimetric(rng, nx)));
    const FiniteMMSpace Y(oracle::random_weights(rng, ny, mass(rng)),
                          DistanceMatrix::from_rows(oracle::random_semimetric(rng, ny)));
    const bool swap = X.total_mass() > Y.total_mass();
    const auto np = swap ? normalize_masses(Y, X) : normalize_masses(X, Y);
    EXPECT_NEAR(np.Y.total_mass(), np.X.total_mass(), 1e-12);
    const double inner = box_upper_plan_search(np.X, np.Y, 1.0, PlanSearch::local).upper;
    EXPECT_EQ(box_upper(X, Y, 1.0, PlanSearch::local).upper, inner + np.additive_term);
  }
}

TEST(TransportPlan, ValidationAndCellPair) {
  const std::array<double, 2> wx{0.5, 0.5};
  const std::array<double, 1> wy{1.0};
  const TransportPlan good{{{0, 0, 0.5}, {1, 0, 0.5}}};
  EXPECT_NO_THROW(validate_plan(good, wx, wy));
  EXPECT_THROW(validate_plan(TransportPlan{{{0, 0, 0.5}, {1, 0, 0.4}}}, wx, wy),
               PreconditionError);
  EXPECT_THROW(validate_plan(TransportPlan{{{0, 0, 0.5}, {1, 0, 0.5}, {1, 0, 0.0}}}, wx, wy),
               PreconditionError);
  EXPECT_THROW(validate_plan(TransportPlan{{{0, 1, 0.5}, {1, 0, 0.5}}}, wx, wy),
               PreconditionError);

  const FiniteMMSpace X({0.5, 0.5}, DistanceMatrix::from_rows({{0, 0.3}, {0.3, 0}}));
  const auto pair = plan_pair(X, FiniteMMSpace::point(1.0), good);
  EXPECT_EQ(pair.size(), 2U);
  EXPECT_EQ(pair.d1()(0, 1), 0.3);
  EXPECT_EQ(pair.d2()(0, 1), 0.0);
}

TEST(VolumeCertificate, HyoukaChainOnModelSpheres) {
  const auto s = modelgeom::hyouka_max_c(2, 10, 1.0, 1.0);
  const auto vX = BallVolumeFunction::sphere(10);
  const auto vY = BallVolumeFunction::sphere(2);
  const auto cert = box_lower_volume_certificate(vX, vY, s.c, s.c);
  ASSERT_TRUE(cert.has_value());
  EXPECT_EQ(cert->bound, s.c);
  EXPECT_NEAR(cert->v_x, oracle::sphere_ball_fraction(10, 2 * s.c), 1e-12);
  EXPECT_NEAR(cert->v_y, oracle::sphere_ball_fraction(2, s.c / 2), 1e-12);
  EXPECT_LE(cert->v_x + kCertificateMargin, cert->rhs);
  EXPECT_EQ(cert->witness()["c"], s.c);
}

TEST(VolumeCertificate, RejectionsAndFailures) {
  const auto v = BallVolumeFunction::sphere(2);
  EXPECT_FALSE(box_lower_volume_certificate(v, v, 0.5, 0.5).has_value());
  EXPECT_THROW(box_lower_volume_certificate(v, v, 0.5, 1.0), DomainError);
  EXPECT_THROW(box_lower_volume_certificate(v, v, 0.5, 0.0), DomainError);
  EXPECT_THROW(box_lower_volume_certificate(v, v, 0.0, 0.5), DomainError);
  auto space = std::make_shared<const FiniteMMSpace>(uniform(cycle(5, 1.0)));
  const auto unflagged = BallVolumeFunction::empirical(space, false);
  EXPECT_THROW(box_lower_volume_certificate(unflagged, v, 0.5, 0.5), PreconditionError);
  const FiniteMMSpace heavy({1.0, 1.0}, DistanceMatrix::from_rows({{0, 1}, {1, 0}}));
  EXPECT_THROW(BallVolumeFunction::empirical(std::make_shared<const FiniteMMSpace>(heavy), true),
               PreconditionError);
}

TEST(BallVolumeFunction, ClosedFormsAndEmpirical) {
  const auto h = BallVolumeFunction::hamming(6);
  for (int k = 0; k <= 6; ++k) {
    EXPECT_NEAR(h(k / 6.0), oracle::binomial_mass(6, [k](int j) { return j <= k; }), 1e-15);
  }
  EXPECT_EQ(h(-0.1), 0.0);
  EXPECT_EQ(h(1.0), 1.0);
  const auto cp = BallVolumeFunction::cp(1);
  // CP^1 is the round sphere of radius 1/2.
  EXPECT_NEAR(cp(0.5), oracle::sphere_ball_fraction(2, 1.0), 1e-12);
  EXPECT_EQ(cp(std::acos(-1.0) / 2), 1.0);

  auto space = std::make_shared<const FiniteMMSpace>(uniform(cycle(6, 1.0)));
  const auto e = BallVolumeFunction::empirical(space, true);
  EXPECT_NEAR(e(0.0), 1.0 / 6, 1e-15);
  EXPECT_NEAR(e(1.0 / 3), 3.0 / 6, 1e-15);
  EXPECT_EQ(e(1.0), 1.0);
  EXPECT_NEAR(e.center_variance(0.5), 0.0, 1e-20);
  double prev = 0.0;
  for (double r = 0.0; r <= 1.2; r += 0.01) {
    EXPECT_GE(e(r), prev);
    prev = e(r);
  }
}

// Certified lower bounds never exceed an upper bound realized by an explicit
// plan on small homogeneous spaces.
TEST(VolumeCertificate, SoundOnSmallUniformSpaces) {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> scale(0.05, 3.0);
  std::vector<double> grid;
  for (int i = 1; i < 40; ++i) grid.push_back(0.025 * i);
  int fired = 0;
  for (int t = 0; t < 500; ++t) {
    const std::size_t k = 3 + t % 4;
    const auto dx = cycle(k, scale(rng));
    const auto dy = cycle(k, scale(rng));
    const auto X = std::make_shared<const FiniteMMSpace>(uniform(dx));
    const auto Y = std::make_shared<const FiniteMMSpace>(uniform(dy));
    const auto cert = best_volume_certificate(BallVolumeFunction::empirical(X, true),
                                              BallVolumeFunction::empirical(Y, true), grid, grid);
    if (!cert) continue;
    ++fired;
    const double exact = oracle::bijection_box(dx, dy, 1.0);
    EXPECT_LE(cert->bound, exact + 1e-12) << t;
  }
  EXPECT_GT(fired, 50);
}

TEST(DiameterGap, SpecialOrthogonalGroups) {
  const auto so = [](int n) { return modelgeom::model_space_spec(ModelKind::so, n); };
  EXPECT_EQ(box_lower_diameter_gap(so(4), so(3)), 0.5);
  EXPECT_EQ(box_lower_diameter_gap(so(3), so(2)), 0.0);
  EXPECT_EQ(box_lower_diameter_gap(so(5), so(5)), 0.0);
  EXPECT_THROW(box_lower_diameter_gap(modelgeom::model_space_spec(ModelKind::cp, 2), so(3)),
               UnsupportedError);
}

TEST(Coupling, LargeBandCouplesEverything) {
  const auto r = sphere_codim1_coupling_upper(3, 200, 2.0, 1);
  EXPECT_EQ(r.upper_witness["band_count"], 200);
  const double reach = r.upper_witness["max_equator_distance"];
  EXPECT_LE(r.upper, 2 * reach + 1e-9);
  EXPECT_LE(r.upper, 1.0);
}

TEST(Coupling, ValueInRangeAndErrors) {
  const auto r = sphere_codim1_coupling_upper(4, 300, 0.3, 1);
  EXPECT_GT(r.upper, 0.0);
  EXPECT_LE(r.upper, 1.0);
  EXPECT_EQ(sphere_codim1_coupling_upper(4, 300, 0.3, 1).upper, r.upper);
  const auto cp = sphere_codim1_coupling_upper(3, 200, 0.3, 2, CouplingFamily::cp);
  EXPECT_LE(cp.upper, 1.0);
  EXPECT_THROW(sphere_codim1_coupling_upper(1, 300, 0.3, 1), DomainError);
  EXPECT_THROW(sphere_codim1_coupling_upper(4, 99, 0.3, 1), DomainError);
  EXPECT_THROW(sphere_codim1_coupling_upper(4, 300, 0.0, 1), DomainError);
  EXPECT_THROW(sphere_codim1_coupling_upper(4, 5000, 0.3, 1), SizeError);
}

}  // namespace
}  // namespace mmbox::boxdist
