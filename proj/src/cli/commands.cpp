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

#include "commands.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <memory>
#include <optional>
#include <sstream>

#include "mmbox/boxdist/certificates.hpp"
#include "mmbox/cli/cli.hpp"
#include "mmbox/boxdist/coupling.hpp"
#include "mmbox/boxdist/plan_search.hpp"
#include "mmbox/core/functions.hpp"
#include "mmbox/core/observable.hpp"
#include "mmbox/core/random.hpp"
#include "mmbox/core/serialization.hpp"
#include "mmbox/error.hpp"
#include "mmbox/modelgeom/bounds.hpp"
#include "mmbox/modelgeom/hamming.hpp"
#include "mmbox/modelgeom/model_space.hpp"
#include "mmbox/samplers/samplers.hpp"

namespace mmbox::cli {

namespace {

using modelgeom::ModelKind;

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

Value num(double v) { return v; }
Value integer(std::int64_t v) { return v; }
Value text(std::string s) { return s; }

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) parts.push_back(item);
  return parts;
}

std::optional<long long> parse_int(const std::string& s) {
  long long v = 0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

// kind:n[:N][:frobenius|geodesic|exhaustive]
samplers::SampleConfig parse_sample_spec(const std::string& spec, std::uint64_t seed) {
  const auto parts = split(spec, ':');
  if (parts.size() < 2) throw DomainError("sampler spec '" + spec + "' must look like kind:n[:N]");
  samplers::SampleConfig cfg;
  cfg.kind = modelgeom::parse_model_kind(parts[0]);
  const auto n = parse_int(parts[1]);
  if (!n || *n < 1) throw DomainError("sampler spec '" + spec + "': bad dimension");
  cfg.n = static_cast<int>(*n);
  cfg.seed = seed;
  bool has_count = false;
  for (std::size_t i = 2; i < parts.size(); ++i) {
    if (const auto v = parse_int(parts[i])) {
      if (*v < 1) throw DomainError("sampler spec '" + spec + "': N must be >= 1");
      cfg.N = static_cast<std::size_t>(*v);
      has_count = true;
    } else if (parts[i] == "frobenius") {
      cfg.metric = samplers::SoMetric::frobenius;
    } else if (parts[i] == "geodesic") {
      cfg.metric = samplers::SoMetric::geodesic;
    } else if (parts[i] == "exhaustive") {
      cfg.hamming_exhaustive = true;
    } else {
      throw DomainError("sampler spec '" + spec + "': unknown field '" + parts[i] + "'");
    }
  }
  if (!has_count && !cfg.hamming_exhaustive) {
    if (cfg.kind != modelgeom::ModelKind::hamming || cfg.n > samplers::kMaxExhaustiveHamming) {
      throw DomainError("sampler spec '" + spec + "' needs a sample count N");
    }
    cfg.hamming_exhaustive = true;
  }
  return cfg;
}

double kappa1_of(const modelgeom::ModelSpaceSpec& s) {
  if (s.dimension <= 1 || !s.ricci_lower) return 1.0;
  return *s.ricci_lower / (s.dimension - 1);
}

Output make_output(const std::string& command, std::vector<std::string> columns) {
  Output o;
  o.command = command;
  o.table.columns = std::move(columns);
  return o;
}

void require_format(const Globals& g) {
  if (g.format != "json" && g.format != "csv") throw DomainError("format must be json or csv");
}

}  // namespace

CommandResult cmd_bounds(const Globals& g, const BoundsArgs& a) {
  require_format(g);
  const ModelKind kind = modelgeom::parse_model_kind(a.kind);
  if (kind == ModelKind::hamming) throw DomainError("bounds: kind must be sphere, cp or so");
  Output o = make_output("bounds", {"section", "kind", "m", "n", "k", "value", "aux", "status"});
  const std::string kname(modelgeom::to_string(kind));

  for (int m : a.m) {
    for (int n : a.n) {
      std::vector<Value> row{text("grid"), text(kname), integer(m), integer(n), Value{}};
      if (n <= m) {
        row.insert(row.end(), {Value{}, Value{}, text("not-applicable")});
        o.table.rows.push_back(std::move(row));
        continue;
      }
      if (kind == ModelKind::so) {
        row.insert(row.end(), {num(modelgeom::asobisugi_bound(n, m)),
                               num(std::abs(modelgeom::so_diameter(n) - modelgeom::so_diameter(m))),
                               text("ok")});
      } else {
        const auto M = modelgeom::model_space_spec(kind, m);
        const auto N = modelgeom::model_space_spec(kind, n);
        const auto h = modelgeom::hyouka_max_c(M.dimension, N.dimension, kappa1_of(M), *N.a_N,
                                               g.tol);
        row.insert(row.end(), {num(h.c), num(h.log_margin), text("ok")});
      }
      o.table.rows.push_back(std::move(row));
    }
  }

  o.table.rows.push_back({text("constant"), text("kaotan"), Value{}, Value{}, Value{},
                          num(modelgeom::kaotan_constant(a.C1, a.C2, a.C3)), Value{}, text("ok")});
  o.table.rows.push_back({text("constant"), text("oosawa"), Value{}, Value{}, Value{},
                          num(modelgeom::oosawa_constant(a.C1, a.C2, a.C3)), Value{}, text("ok")});

  for (int k : a.k) {
    const int n_k = static_cast<int>(std::floor(a.C1 * k));
    const int m_k = static_cast<int>(std::floor(a.C2 * k));
    std::vector<Value> row{text("finite_k"), text(kname), integer(m_k), integer(n_k), integer(k)};
    try {
      if (kind == ModelKind::so) {
        if (n_k - m_k < a.C3 * k) throw PreconditionError("n_k - m_k >= C3 k fails");
        const double chain = modelgeom::oosawa_finite_k(n_k, m_k);
        row.insert(row.end(), {num(std::min(0.5, chain)), num(chain), text("ok")});
      } else {
        const auto fam = kind == ModelKind::sphere ? modelgeom::KaotanFamily::sphere
                                                   : modelgeom::KaotanFamily::cp;
        const auto t = modelgeom::kaotan_finite_k(n_k, m_k, a.C1, a.C2, a.C3, k, fam);
        row.insert(row.end(), {num(t.threshold), num(t.c), text("ok")});
      }
    } catch (const PreconditionError&) {
      row.insert(row.end(), {Value{}, Value{}, text("not-applicable")});
    }
    o.table.rows.push_back(std::move(row));
  }
  return {std::move(o), 0};
}

namespace {

struct BoxInput {
  std::shared_ptr<const FiniteMMSpace> space;
  std::optional<samplers::SampleConfig> sample;
};

BoxInput load_input(const std::string& path, const std::string& spec, std::uint64_t seed,
                    const char* which) {
  if (!path.empty() && !spec.empty()) {
    throw DomainError(std::string("give either a file or a sampler spec for ") + which);
  }
  if (!path.empty()) return {std::make_shared<const FiniteMMSpace>(read_space(path)), {}};
  if (spec.empty()) throw DomainError(std::string("missing input for ") + which);
  const auto cfg = parse_sample_spec(spec, seed);
  return {std::make_shared<const FiniteMMSpace>(samplers::sample_space(cfg)), cfg};
}

boxdist::PlanSearch parse_mode(const std::string& s) {
  if (s == "exact") return boxdist::PlanSearch::exact;
  if (s == "local") return boxdist::PlanSearch::local;
  if (s == "seeded-restart") return boxdist::PlanSearch::seeded_restart;
  throw DomainError("mode must be exact, local or seeded-restart");
}

std::vector<double> linear_grid(double lo, double hi, std::size_t count) {
  std::vector<double> g;
  for (std::size_t i = 1; i <= count; ++i) g.push_back(lo + (hi - lo) * i / (count + 1));
  return g;
}

bool exactly_uniform(const BoxInput& in) {
  return in.sample && in.sample->kind == ModelKind::hamming && in.sample->hamming_exhaustive;
}

std::optional<boxdist::BallVolumeFunction> closed_form(const samplers::SampleConfig& cfg) {
  switch (cfg.kind) {
    case ModelKind::sphere:
      return boxdist::BallVolumeFunction::sphere(cfg.n);
    case ModelKind::cp:
      return boxdist::BallVolumeFunction::cp(cfg.n);
    case ModelKind::hamming:
      return boxdist::BallVolumeFunction::hamming(cfg.n);
    case ModelKind::so:
      return std::nullopt;
  }
  return std::nullopt;
}

CommandResult box_codim1(const Globals& g, const BoxArgs& a) {
  boxdist::CouplingFamily fam;
  if (a.codim1 == "sphere") {
    fam = boxdist::CouplingFamily::sphere;
  } else if (a.codim1 == "cp") {
    fam = boxdist::CouplingFamily::cp;
  } else {
    throw DomainError("codim1 must be sphere or cp");
  }
  Output o = make_output("box", {"family", "n", "N", "eps", "seed", "upper", "band_mass",
                                 "max_equator_distance"});
  for (int n : a.n) {
    for (std::size_t s = 0; s < a.seeds; ++s) {
      const std::uint64_t seed = derive_seed(g.seed, s);
      const BoundReport r = boxdist::sphere_codim1_coupling_upper(n, a.N, a.eps, seed, fam);
      o.table.rows.push_back({text(a.codim1), integer(n), integer(static_cast<std::int64_t>(a.N)),
                              num(a.eps), text(std::to_string(seed)), num(r.upper),
                              num(r.upper_witness["band_mass"].get<double>()),
                              num(r.upper_witness["max_equator_distance"].get<double>())});
    }
  }
  return {std::move(o), 0};
}

}  // namespace

CommandResult cmd_box(const Globals& g, const BoxArgs& a) {
  require_format(g);
  if (!a.codim1.empty()) return box_codim1(g, a);
  if (!(a.lambda >= 0.0) || !std::isfinite(a.lambda)) throw DomainError("lambda must be >= 0");
  const BoxInput X = load_input(a.x, a.x_sample, derive_seed(g.seed, 0), "x");
  const BoxInput Y = load_input(a.y, a.y_sample, derive_seed(g.seed, 1), "y");

  boxdist::PlanSearchOptions opts;
  opts.seed = g.seed;
  opts.restarts = a.restarts;
  opts.refinement = a.refinement;
  opts.max_evaluations = a.max_evaluations;
  BoundReport report = boxdist::box_upper(*X.space, *Y.space, a.lambda, parse_mode(a.mode), opts);

  nlohmann::json certs = nlohmann::json::array();
  // Finite-space volume certificate: valid for these very spaces when both
  // have center-independent ball masses.
  const bool probability = std::abs(X.space->total_mass() - 1.0) <= 1e-12 &&
                           std::abs(Y.space->total_mass() - 1.0) <= 1e-12;
  const bool uniform = a.assert_uniform || (exactly_uniform(X) && exactly_uniform(Y));
  if (probability && uniform && a.lambda == 1.0) {
    const auto vX = boxdist::BallVolumeFunction::empirical(X.space, true);
    const auto vY = boxdist::BallVolumeFunction::empirical(Y.space, true);
    const double span = std::max(vX.diameter(), vY.diameter());
    const auto a_grid = linear_grid(0.0, 2.0 * std::max(span, 1e-9), 40);
    const auto c_grid = linear_grid(0.0, 1.0, 99);
    if (auto cert = boxdist::best_volume_certificate(vX, vY, a_grid, c_grid)) {
      certs.push_back(cert->witness());
      if (cert->bound > report.lower) {
        report.lower = cert->bound;
        report.lower_witness = cert->witness();
        report.methods.push_back("volume-certificate");
      }
    }
  }

  // Certificates for the model spaces the samples approximate; they bound
  // the limits, not the sampled spaces, so they are reported separately.
  nlohmann::json model = nlohmann::json::array();
  if (X.sample && Y.sample && X.sample->kind == Y.sample->kind) {
    const auto& sx = *X.sample;
    const auto& sy = *Y.sample;
    const auto specX = modelgeom::model_space_spec(sx.kind, sx.n);
    const auto specY = modelgeom::model_space_spec(sy.kind, sy.n);
    if (sx.kind == ModelKind::so) {
      model.push_back({{"kind", "diameter-gap"},
                       {"bound", boxdist::box_lower_diameter_gap(specX, specY)}});
    } else if (sx.n != sy.n) {
      const auto vX = closed_form(sx);
      const auto vY = closed_form(sy);
      const double span = std::max(specX.diameter, specY.diameter);
      const auto a_grid = linear_grid(0.0, 2.0 * span, 40);
      const auto c_grid = linear_grid(0.0, 1.0, 99);
      if (auto cert = boxdist::best_volume_certificate(*vX, *vY, a_grid, c_grid)) {
        model.push_back(cert->witness());
      }
    }
  }

  Output o = make_output("box", {"lower", "upper", "methods", "atoms_x", "atoms_y", "lambda",
                                 "mode"});
  std::string methods;
  for (const auto& m : report.methods) methods += (methods.empty() ? "" : ";") + m;
  o.table.rows.push_back({num(report.lower), num(report.upper), text(methods),
                          integer(static_cast<std::int64_t>(X.space->size())),
                          integer(static_cast<std::int64_t>(Y.space->size())), num(a.lambda),
                          text(a.mode)});
  o.detail["report"] = to_json(report);
  o.detail["certificates"] = certs;
  o.detail["model_certificates"] = model;
  return {std::move(o), 0};
}

CommandResult cmd_concentration(const Globals& g, const ConcentrationArgs& a) {
  require_format(g);
  if (!(a.kappa > 0.0)) throw DomainError("kappa must be positive");
  if (!(a.tail_eps > 0.0)) throw DomainError("tail-eps must be positive");
  const ModelKind kind = modelgeom::parse_model_kind(a.kind);
  samplers::SoMetric metric;
  if (a.metric == "frobenius") {
    metric = samplers::SoMetric::frobenius;
  } else if (a.metric == "geodesic") {
    metric = samplers::SoMetric::geodesic;
  } else {
    throw DomainError("metric must be frobenius or geodesic");
  }
  const bool exhaustive = kind == ModelKind::hamming && a.exhaustive;
  Output o = make_output("concentration",
                         {"kind", "n", "atoms", "seed", "kappa", "observable_diameter",
                          "base_point", "tail_eps", "tail_mass",
                          "distance_function_partial_diameter", "binomial_partial_diameter"});
  const std::vector<std::uint64_t> seeds = a.seeds.empty() ? std::vector{g.seed} : a.seeds;
  nlohmann::json trend = nlohmann::json::object();
  for (std::uint64_t seed : seeds) {
    std::vector<samplers::SampleConfig> configs;
    for (int n : a.n) {
      samplers::SampleConfig cfg;
      cfg.kind = kind;
      cfg.n = n;
      cfg.N = a.N;
      cfg.seed = seed;
      cfg.metric = metric;
      cfg.hamming_exhaustive = exhaustive;
      configs.push_back(cfg);
    }
    ObservableStrategy strategy;
    strategy.ascent_iterations = a.ascent;
    // Same seed derivation as concentration_curve, so the witness matches.
    bool decreasing = true;
    double previous = std::numeric_limits<double>::infinity();
    for (const auto& cfg : configs) {
      const FiniteMMSpace space = samplers::sample_space(cfg);
      ObservableStrategy s = strategy;
      s.seed = derive_seed(cfg.seed, 0x6f6273ULL);
      const ObservableResult res = observable_diameter(space, a.kappa, s);
      const double center = median(pushforward(space, res.witness));
      const double tail = levy_tail_mass(space, res.witness, center, a.tail_eps, g.tol);
      double dist_pd = kNaN;
      double binom_pd = kNaN;
      if (exhaustive) {
        const RealFunction f = distance_function(space.dist(), 0);
        dist_pd = partial_diameter(pushforward(space, f), a.kappa);
        binom_pd = modelgeom::hamming_distance_partial_diameter(cfg.n, a.kappa);
      }
      o.table.rows.push_back({text(a.kind), integer(cfg.n),
                              integer(static_cast<std::int64_t>(space.size())),
                              text(std::to_string(seed)), num(a.kappa), num(res.value),
                              integer(static_cast<std::int64_t>(res.base_point)),
                              num(a.tail_eps), num(tail), num(dist_pd), num(binom_pd)});
      if (!(res.value < previous)) decreasing = false;
      previous = res.value;
    }
    trend[std::to_string(seed)] = decreasing;
  }
  o.detail["strictly_decreasing"] = trend;
  return {std::move(o), 0};
}

namespace {

struct VolumeSource {
  std::optional<boxdist::BallVolumeFunction> fn;
  std::shared_ptr<const FiniteMMSpace> space;
  std::string description;
};

VolumeSource parse_volume_source(const std::string& s) {
  if (s.rfind("file:", 0) == 0) {
    auto space = std::make_shared<const FiniteMMSpace>(read_space(s.substr(5)));
    return {std::nullopt, space, s};
  }
  const auto parts = split(s, ':');
  if (parts.size() != 2) {
    throw DomainError("ball-volume source '" + s + "' must be kind:n or file:PATH");
  }
  const auto n = parse_int(parts[1]);
  if (!n || *n < 1) throw DomainError("ball-volume source '" + s + "': bad dimension");
  const int dim = static_cast<int>(*n);
  const ModelKind kind = modelgeom::parse_model_kind(parts[0]);
  switch (kind) {
    case ModelKind::sphere:
      return {boxdist::BallVolumeFunction::sphere(dim), nullptr, s};
    case ModelKind::cp:
      return {boxdist::BallVolumeFunction::cp(dim), nullptr, s};
    case ModelKind::hamming:
      return {boxdist::BallVolumeFunction::hamming(dim), nullptr, s};
    case ModelKind::so:
      break;
  }
  throw DomainError("no closed-form ball volume for '" + s + "'");
}

}  // namespace

CommandResult cmd_certify(const Globals& g, const CertifyArgs& a) {
  require_format(g);
  if (!(a.c > 0.0 && a.c < 1.0)) throw DomainError("c must lie in (0, 1)");
  if (!(a.a > 0.0) || !std::isfinite(a.a)) throw DomainError("a must be positive");
  VolumeSource sx = parse_volume_source(a.x);
  VolumeSource sy = parse_volume_source(a.y);

  Output o = make_output("certify", {"status", "bound", "a", "c", "v_x", "v_y", "rhs",
                                     "x_center_stddev", "y_center_stddev"});
  // Empirical sources must pass the uniformity diagnostic at the radii used.
  double sdx = 0.0;
  double sdy = 0.0;
  if (sx.space) {
    sdx = std::sqrt(samplers::empirical_ball_volume(*sx.space, a.a + a.c).center_variance);
  }
  if (sy.space) {
    sdy = std::sqrt(samplers::empirical_ball_volume(*sy.space, 0.5 * a.a).center_variance);
  }
  o.detail["sources"] = {sx.description, sy.description};
  if (sdx > a.uniformity_tol || sdy > a.uniformity_tol) {
    o.table.rows.push_back({text("refused"), Value{}, num(a.a), num(a.c), Value{}, Value{},
                            Value{}, num(sdx), num(sdy)});
    o.detail["diagnostic"] = {{"uniformity_tol", a.uniformity_tol},
                              {"x_center_stddev", sdx},
                              {"y_center_stddev", sdy}};
    return {std::move(o), kExitSize};
  }
  if (sx.space) sx.fn = boxdist::BallVolumeFunction::empirical(sx.space, true);
  if (sy.space) sy.fn = boxdist::BallVolumeFunction::empirical(sy.space, true);

  const auto cert = boxdist::box_lower_volume_certificate(*sx.fn, *sy.fn, a.a, a.c);
  const double vx = (*sx.fn)(a.a + a.c);
  const double vy = (*sy.fn)(0.5 * a.a);
  o.table.rows.push_back({text(cert ? "pass" : "fail"), cert ? num(cert->bound) : Value{},
                          num(a.a), num(a.c), num(vx), num(vy), num((1.0 - a.c) * vy), num(sdx),
                          num(sdy)});
  if (cert) o.detail["certificate"] = cert->witness();
  return {std::move(o), 0};
}

CommandResult cmd_facts(const Globals& g, const FactsArgs& a) {
  require_format(g);
  const ModelKind kind = modelgeom::parse_model_kind(a.kind);
  Output o = make_output("facts", {"kind", "n", "dimension", "ricci_lower", "sectional_lower",
                                   "total_volume", "diameter", "a_N", "diameter_homogeneous"});
  auto opt = [](const std::optional<double>& v) { return v ? num(*v) : Value{}; };
  for (int n : a.n) {
    const auto s = modelgeom::model_space_spec(kind, n);
    o.table.rows.push_back({text(a.kind), integer(n), integer(s.dimension), opt(s.ricci_lower),
                            opt(s.sectional_lower), num(s.total_volume), num(s.diameter),
                            opt(s.a_N), Value{s.diameter_homogeneous}});
  }
  return {std::move(o), 0};
}

}  // namespace mmbox::cli
