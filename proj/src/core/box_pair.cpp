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

#include "mmbox/core/box_pair.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <string>
#include <vector>

#include "mmbox/core/vertex_cover.hpp"
#include "mmbox/error.hpp"

namespace mmbox {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Removed mass expressed in length units: the smallest eps with
// removed <= lambda * eps.
double budget_eps(double removed, double lambda) {
  if (removed <= 0.0) return 0.0;
  if (lambda == 0.0) return kInf;
  return removed / lambda;
}

std::vector<double> discrepancy_levels(const DistanceMatrix& disc) {
  const std::size_t n = disc.size();
  std::vector<double> levels;
  levels.reserve(n * (n - 1) / 2 + 1);
  levels.push_back(0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) levels.push_back(disc(i, j));
  }
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  return levels;
}

void check_inputs(std::span<const double> weights, const DistanceMatrix& disc, double lambda) {
  if (weights.size() != disc.size()) {
    throw DimensionError("box: weights and discrepancy matrix differ in size");
  }
  if (weights.empty()) throw DimensionError("box: no atoms");
  if (!(lambda >= 0.0) || !std::isfinite(lambda)) {
    throw DomainError("box: lambda must be a finite nonnegative number");
  }
  validate_semimetric(disc, "discrepancy");
}

std::vector<std::size_t> complement(std::size_t n, const std::vector<bool>& removed) {
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < n; ++i) {
    if (!removed[i]) kept.push_back(i);
  }
  return kept;
}

BoundReport solve_exact(std::span<const double> weights, const DistanceMatrix& disc, double lambda) {
  const std::size_t n = weights.size();
  if (n > kExactBoxAtoms) {
    throw SizeError("exact box mode supports at most " + std::to_string(kExactBoxAtoms) +
                    " atoms (got " + std::to_string(n) + "); use heuristic mode");
  }
  const std::vector<double> levels = discrepancy_levels(disc);
  const std::size_t top = levels.size() - 1;

  std::map<std::size_t, VertexCover> cache;
  auto cover_at = [&](std::size_t j) -> const VertexCover& {
    auto it = cache.find(j);
    if (it != cache.end()) return it->second;
    std::vector<std::uint32_t> adj(n, 0);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a + 1; b < n; ++b) {
        if (disc(a, b) > levels[j]) {
          adj[a] |= std::uint32_t{1} << b;
          adj[b] |= std::uint32_t{1} << a;
        }
      }
    }
    return cache.emplace(j, min_weight_vertex_cover(adj, weights)).first->second;
  };
  // Level j covers eps in [levels[j], levels[j+1]); it is feasible when the
  // minimum cover fits the budget somewhere in that interval.
  auto feasible = [&](std::size_t j) {
    if (j == top) return true;
    return budget_eps(cover_at(j).weight, lambda) <= levels[j + 1];
  };

  std::size_t lo = 0;
  std::size_t hi = top;
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (feasible(mid)) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  const VertexCover& cover = cover_at(lo);
  const double value = std::max(levels[lo], budget_eps(cover.weight, lambda));

  std::vector<bool> removed(n, false);
  for (std::size_t i = 0; i < n; ++i) removed[i] = (cover.members >> i & 1U) != 0;

  BoundReport report;
  report.lower = value;
  report.upper = value;
  report.retained = complement(n, removed);
  report.methods = {"box-exact-vertex-cover"};
  report.upper_witness = {{"retained", report.retained},
                          {"level", levels[lo]},
                          {"removed_mass", cover.weight},
                          {"lambda", lambda}};
  report.lower_witness = {{"kind", "min-cover-infeasibility"},
                          {"level", levels[lo]},
                          {"min_cover_weight", cover.weight},
                          {"lambda", lambda}};
  if (lo > 0) {
    report.lower_witness["previous_level"] = levels[lo - 1];
    report.lower_witness["previous_min_cover_weight"] = cover_at(lo - 1).weight;
  }
  return report;
}

struct HeuristicProbe {
  double cover_weight = kInf;  // weight of a valid cover (upper side)
  double packing = 0.0;        // lower bound on the minimum cover weight
};

class HeuristicBox {
 public:
  HeuristicBox(std::span<const double> weights, const DistanceMatrix& disc, double lambda)
      : w_(weights), disc_(disc), lambda_(lambda), n_(weights.size()) {}

  // Greedy deletion by conflict degree per unit mass. Gives up once the
  // removed mass already exceeds `cutoff` (in eps units).
  double greedy_cover(double level, double cutoff, std::vector<bool>* removed_out) const {
    std::vector<std::size_t> degree(n_, 0);
    for (std::size_t a = 0; a < n_; ++a) {
      const auto row = disc_.row(a);
      for (std::size_t b = a + 1; b < n_; ++b) {
        if (row[b] > level) {
          ++degree[a];
          ++degree[b];
        }
      }
    }
    std::vector<bool> removed(n_, false);
    double weight = 0.0;
    for (;;) {
      std::size_t pick = n_;
      double pick_score = -1.0;
      for (std::size_t v = 0; v < n_; ++v) {
        if (removed[v] || degree[v] == 0) continue;
        const double score =
            w_[v] > 0.0 ? static_cast<double>(degree[v]) / w_[v] : kInf;
        if (score > pick_score) {
          pick_score = score;
          pick = v;
        }
      }
      if (pick == n_) break;
      removed[pick] = true;
      weight += w_[pick];
      if (budget_eps(weight, lambda_) >= cutoff) return kInf;
      const auto row = disc_.row(pick);
      for (std::size_t u = 0; u < n_; ++u) {
        if (!removed[u] && row[u] > level) --degree[u];
      }
      degree[pick] = 0;
    }
    if (removed_out != nullptr) *removed_out = std::move(removed);
    return weight;
  }

  // Local-ratio pass: the packed amount bounds the optimum from below and
  // the saturated vertices form a cover.
  std::pair<double, double> packing(double level, std::vector<bool>* removed_out) const {
    std::vector<double> residual(w_.begin(), w_.end());
    double packed = 0.0;
    for (std::size_t a = 0; a < n_; ++a) {
      const auto row = disc_.row(a);
      for (std::size_t b = a + 1; b < n_ && residual[a] > 0.0; ++b) {
        if (row[b] > level && residual[b] > 0.0) {
          const double delta = std::min(residual[a], residual[b]);
          residual[a] -= delta;
          residual[b] -= delta;
          packed += delta;
        }
      }
    }
    std::vector<bool> removed(n_, false);
    double cover = 0.0;
    for (std::size_t v = 0; v < n_; ++v) {
      if (residual[v] <= 0.0) {
        removed[v] = true;
        cover += w_[v];
      }
    }
    if (removed_out != nullptr) *removed_out = std::move(removed);
    return {packed, cover};
  }

  BoundReport solve(const HeuristicOptions& options) {
    levels_ = discrepancy_levels(disc_);
    const std::size_t top = levels_.size() - 1;
    const std::size_t grid = std::max<std::size_t>(options.grid, 2);

    auto probe_range = [&](std::size_t from, std::size_t to) {
      if (to <= from + 1) return;
      const std::size_t span = to - from;
      const std::size_t steps = std::min(grid, span);
      for (std::size_t s = 1; s < steps; ++s) probe(from + (span * s) / steps);
    };
    probe(0);
    probe(top);
    probe_range(0, top);
    for (int pass = 0; pass < options.refine_passes; ++pass) {
      const std::size_t b = best_index_;
      auto it = probes_.find(b);
      const std::size_t prev = it == probes_.begin() ? b : std::prev(it)->first;
      const std::size_t next = std::next(it) == probes_.end() ? b : std::next(it)->first;
      probe_range(prev, b);
      probe_range(b, next);
    }

    // For j in [e_i, e_{i+1}) the true cover weight is at least the packing
    // bound at e_{i+1}, and the level is at least levels[e_i].
    double lower = kInf;
    for (auto it = probes_.begin(); it != probes_.end(); ++it) {
      auto nx = std::next(it);
      const double needed = nx == probes_.end() ? 0.0 : budget_eps(nx->second.packing, lambda_);
      lower = std::min(lower, std::max(levels_[it->first], needed));
    }

    std::vector<bool> removed;
    const double level = levels_[best_index_];
    const double greedy = greedy_cover(level, kInf, &removed);
    std::vector<bool> removed_lr;
    const double lr = packing(level, &removed_lr).second;
    double removed_mass = greedy;
    if (lr < greedy) {
      removed = std::move(removed_lr);
      removed_mass = lr;
    }

    BoundReport report;
    report.upper = best_upper_;
    report.lower = std::min(lower, best_upper_);
    report.retained = complement(n_, removed);
    report.methods = {"box-heuristic-greedy-cover", "box-heuristic-edge-packing"};
    report.upper_witness = {{"retained", report.retained},
                            {"level", level},
                            {"removed_mass", removed_mass},
                            {"lambda", lambda_}};
    report.lower_witness = {{"kind", "edge-packing"},
                            {"levels_probed", probes_.size()},
                            {"lambda", lambda_}};
    return report;
  }

 private:
  void probe(std::size_t j) {
    if (probes_.count(j) != 0) return;
    HeuristicProbe p;
    const double level = levels_[j];
    const auto [packed, lr_cover] = packing(level, nullptr);
    p.packing = packed;
    const double cutoff = best_upper_;
    const double greedy = greedy_cover(level, cutoff, nullptr);
    p.cover_weight = std::min(greedy, lr_cover);
    probes_.emplace(j, p);
    const double value = std::max(level, budget_eps(p.cover_weight, lambda_));
    if (value < best_upper_) {
      best_upper_ = value;
      best_index_ = j;
    }
  }

  std::span<const double> w_;
  const DistanceMatrix& disc_;
  double lambda_;
  std::size_t n_;
  std::vector<double> levels_;
  std::map<std::size_t, HeuristicProbe> probes_;
  double best_upper_ = kInf;
  std::size_t best_index_ = 0;
};

}  // namespace

BoundReport box_lambda_discrepancy(std::span<const double> weights, const DistanceMatrix& disc,
                                   double lambda, BoxMode mode, const HeuristicOptions& options) {
  check_inputs(weights, disc, lambda);
  if (mode == BoxMode::exact) return solve_exact(weights, disc, lambda);
  return HeuristicBox(weights, disc, lambda).solve(options);
}

BoundReport box_lambda_pair(const SemiMetricPair& pair, double lambda, BoxMode mode,
                            const HeuristicOptions& options) {
  return box_lambda_discrepancy(pair.weights(), pair.discrepancy(), lambda, mode, options);
}

}  // namespace mmbox
