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

#include "mmbox/boxdist/plan_search.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <numeric>
#include <optional>
#include <string>
#include <utility>

#include "mmbox/core/random.hpp"
#include "mmbox/error.hpp"

namespace mmbox::boxdist {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double scaled_tol(double tol, double mass) { return tol * std::max(1.0, mass); }

bool is_uniform(const FiniteMMSpace& s) {
  const double w0 = s.weight(0);
  for (double w : s.weights()) {
    if (std::abs(w - w0) > kPlanTolerance * std::max(1.0, w0)) return false;
  }
  return true;
}

bool bijection_eligible(const FiniteMMSpace& X, const FiniteMMSpace& Y) {
  return X.size() == Y.size() && is_uniform(X) && is_uniform(Y);
}

std::string search_name(PlanSearch s) {
  switch (s) {
    case PlanSearch::exact:
      return "exact";
    case PlanSearch::local:
      return "local";
    case PlanSearch::seeded_restart:
      return "seeded-restart";
  }
  return "unknown";
}

TransportPlan bijection_plan(const std::vector<std::size_t>& perm, double cell_mass) {
  TransportPlan plan;
  plan.cells.reserve(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) plan.cells.push_back({i, perm[i], cell_mass});
  return plan;
}

struct Candidate {
  double upper = kInf;
  TransportPlan plan;
  BoundReport box;
};

// Evaluates plans and counts evaluations.
class PlanEvaluator {
 public:
  PlanEvaluator(const FiniteMMSpace& X, const FiniteMMSpace& Y, double lambda,
                const HeuristicOptions& heuristic)
      : X_(X), Y_(Y), lambda_(lambda), heuristic_(heuristic) {}

  BoundReport evaluate(const TransportPlan& plan) {
    ++evaluations_;
    const BoxMode mode =
        plan.cells.size() <= kExactBoxAtoms ? BoxMode::exact : BoxMode::heuristic;
    BoundReport r = box_lambda_pair(plan_pair(X_, Y_, plan), lambda_, mode, heuristic_);
    r.upper_witness["box_mode"] = mode == BoxMode::exact ? "exact" : "heuristic";
    return r;
  }

  void offer(const TransportPlan& plan, const BoundReport& box, Candidate& best) const {
    if (box.upper < best.upper) {
      best.upper = box.upper;
      best.plan = plan;
      best.box = box;
    }
  }

  std::size_t evaluations() const { return evaluations_; }

 private:
  const FiniteMMSpace& X_;
  const FiniteMMSpace& Y_;
  double lambda_;
  HeuristicOptions heuristic_;
  std::size_t evaluations_ = 0;
};

// Integer tables with every row and column summing to `r`, support capped.
class TableEnumerator {
 public:
  TableEnumerator(std::size_t n, int r, std::size_t max_cells)
      : n_(n), r_(r), max_cells_(max_cells), table_(n * n, 0), col_left_(n, r) {}

  template <typename Visit>
  void run(Visit&& visit) {
    fill(0, 0, r_, 0, visit);
  }

 private:
  template <typename Visit>
  void fill(std::size_t row, std::size_t col, int row_left, std::size_t support, Visit& visit) {
    if (row == n_) {
      visit(table_);
      return;
    }
    if (col == n_) {
      if (row_left == 0) fill(row + 1, 0, r_, support, visit);
      return;
    }
    // Remaining columns must be able to absorb the rest of the row.
    int capacity = 0;
    for (std::size_t c = col + 1; c < n_; ++c) capacity += col_left_[c];
    const int hi = std::min(row_left, col_left_[col]);
    for (int v = hi; v >= 0; --v) {
      if (row_left - v > capacity) break;
      const std::size_t s = support + (v > 0 ? 1 : 0);
      if (s > max_cells_) continue;
      table_[row * n_ + col] = v;
      col_left_[col] -= v;
      fill(row, col + 1, row_left - v, s, visit);
      col_left_[col] += v;
    }
    table_[row * n_ + col] = 0;
  }

  std::size_t n_;
  int r_;
  std::size_t max_cells_;
  std::vector<int> table_;
  std::vector<int> col_left_;
};

Candidate exact_search(const FiniteMMSpace& X, const FiniteMMSpace& Y, PlanEvaluator& eval,
                       const PlanSearchOptions& options) {
  if (X.size() > kExactPlanAtoms || Y.size() > kExactPlanAtoms) {
    throw SizeError("exact plan search supports at most " + std::to_string(kExactPlanAtoms) +
                    " atoms per space (got " + std::to_string(X.size()) + " and " +
                    std::to_string(Y.size()) + ")");
  }
  if (!bijection_eligible(X, Y)) {
    throw PreconditionError("exact plan search needs uniform spaces with equal atom counts");
  }
  if (options.refinement < 1) throw DomainError("plan search refinement must be >= 1");
  const std::size_t n = X.size();
  const double unit = X.total_mass() / (static_cast<double>(n) * options.refinement);
  Candidate best;
  if (options.refinement == 1) {
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      const TransportPlan plan = bijection_plan(perm, X.weight(0));
      eval.offer(plan, eval.evaluate(plan), best);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
  }
  TableEnumerator tables(n, options.refinement, options.max_cells);
  tables.run([&](const std::vector<int>& t) {
    TransportPlan plan;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (t[i * n + j] > 0) plan.cells.push_back({i, j, t[i * n + j] * unit});
      }
    }
    eval.offer(plan, eval.evaluate(plan), best);
  });
  if (best.upper == kInf) {
    throw PreconditionError("exact plan search: no table fits within max_cells");
  }
  return best;
}

// Spanning-tree basis of a transportation-polytope vertex. Nodes 0..nx-1
// are rows, nx..nx+ny-1 columns.
class BasisState {
 public:
  struct BasicCell {
    std::size_t row;
    std::size_t col;
    double flow;
  };

  BasisState(std::size_t nx, std::size_t ny, std::vector<BasicCell> cells, double zero_tol)
      : nx_(nx), ny_(ny), cells_(std::move(cells)), zero_tol_(zero_tol) {}

  TransportPlan plan() const {
    TransportPlan p;
    for (const auto& c : cells_) {
      if (c.flow > zero_tol_) p.cells.push_back({c.row, c.col, c.flow});
    }
    std::sort(p.cells.begin(), p.cells.end(), [](const auto& a, const auto& b) {
      return a.source != b.source ? a.source < b.source : a.target < b.target;
    });
    return p;
  }

  bool is_basic(std::size_t r, std::size_t c) const {
    return std::any_of(cells_.begin(), cells_.end(),
                       [&](const BasicCell& b) { return b.row == r && b.col == c; });
  }

  // Pivots (r, c) into the basis. Returns nullopt for a degenerate pivot
  // (no mass moves), leaving the state unchanged.
  std::optional<BasisState> pivot(std::size_t r, std::size_t c) const {
    const std::vector<std::size_t> path = tree_path(r, nx_ + c);
    // path holds basic-cell indices from row r to column c; odd positions
    // (0-based even) lose mass.
    double theta = kInf;
    std::size_t leaving = 0;
    for (std::size_t k = 0; k < path.size(); k += 2) {
      if (cells_[path[k]].flow < theta) {
        theta = cells_[path[k]].flow;
        leaving = path[k];
      }
    }
    if (!(theta > zero_tol_)) return std::nullopt;
    BasisState next = *this;
    for (std::size_t k = 0; k < path.size(); ++k) {
      next.cells_[path[k]].flow += (k % 2 == 0 ? -theta : theta);
    }
    next.cells_[leaving] = {r, c, theta};
    for (auto& cell : next.cells_) cell.flow = std::max(cell.flow, 0.0);
    return next;
  }

 private:
  std::vector<std::size_t> tree_path(std::size_t from, std::size_t to) const {
    const std::size_t nodes = nx_ + ny_;
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj(nodes);
    for (std::size_t k = 0; k < cells_.size(); ++k) {
      adj[cells_[k].row].push_back({nx_ + cells_[k].col, k});
      adj[nx_ + cells_[k].col].push_back({cells_[k].row, k});
    }
    std::vector<std::size_t> via(nodes, cells_.size());
    std::vector<std::size_t> parent(nodes, nodes);
    std::deque<std::size_t> queue{from};
    parent[from] = from;
    while (!queue.empty()) {
      const std::size_t u = queue.front();
      queue.pop_front();
      if (u == to) break;
      for (const auto& [v, k] : adj[u]) {
        if (parent[v] == nodes) {
          parent[v] = u;
          via[v] = k;
          queue.push_back(v);
        }
      }
    }
    if (parent[to] == nodes) throw Error("plan search: basis is not a spanning tree");
    std::vector<std::size_t> path;
    for (std::size_t v = to; v != from; v = parent[v]) path.push_back(via[v]);
    std::reverse(path.begin(), path.end());
    return path;
  }

  std::size_t nx_;
  std::size_t ny_;
  std::vector<BasicCell> cells_;
  double zero_tol_;
};

BasisState northwest_corner(const FiniteMMSpace& X, const FiniteMMSpace& Y,
                            const std::vector<std::size_t>& row_order,
                            const std::vector<std::size_t>& col_order, double zero_tol) {
  const std::size_t nx = X.size();
  const std::size_t ny = Y.size();
  std::vector<double> supply(nx);
  std::vector<double> demand(ny);
  for (std::size_t i = 0; i < nx; ++i) supply[i] = X.weight(row_order[i]);
  for (std::size_t j = 0; j < ny; ++j) demand[j] = Y.weight(col_order[j]);
  std::vector<BasisState::BasicCell> cells;
  std::size_t i = 0;
  std::size_t j = 0;
  for (;;) {
    const bool last = i + 1 == nx && j + 1 == ny;
    // The final cell takes whatever remains so rounding cannot leak.
    const double x = last ? std::max(supply[i], 0.0) : std::min(supply[i], demand[j]);
    cells.push_back({row_order[i], col_order[j], std::max(x, 0.0)});
    if (last) break;
    supply[i] -= x;
    demand[j] -= x;
    if (i + 1 < nx && (supply[i] <= zero_tol || j + 1 == ny)) {
      ++i;
    } else {
      ++j;
    }
  }
  return BasisState(nx, ny, std::move(cells), zero_tol);
}

BasisState basis_from_bijection(const std::vector<std::size_t>& perm, double cell_mass,
                                double zero_tol) {
  const std::size_t n = perm.size();
  std::vector<BasisState::BasicCell> cells;
  for (std::size_t i = 0; i < n; ++i) cells.push_back({i, perm[i], cell_mass});
  for (std::size_t i = 0; i + 1 < n; ++i) cells.push_back({i, perm[i + 1], 0.0});
  return BasisState(n, n, std::move(cells), zero_tol);
}

class LocalSearch {
 public:
  LocalSearch(const FiniteMMSpace& X, const FiniteMMSpace& Y, PlanEvaluator& eval,
              const PlanSearchOptions& options)
      : X_(X), Y_(Y), eval_(eval), options_(options),
        zero_tol_(scaled_tol(1e-14, X.total_mass())) {}

  // Descends from a bijection (2-swaps, then pivots).
  void from_bijection(std::vector<std::size_t> perm, Rng* rng, Candidate& best) {
    budget_ = options_.max_evaluations;
    const double cell_mass = X_.weight(0);
    TransportPlan plan = bijection_plan(perm, cell_mass);
    double current = spend(plan, best);
    const std::size_t n = perm.size();
    bool improved = true;
    while (improved && budget_ > 0) {
      improved = false;
      for (std::size_t a = 0; a < n && !improved && budget_ > 0; ++a) {
        for (std::size_t b = a + 1; b < n && budget_ > 0; ++b) {
          std::swap(perm[a], perm[b]);
          const TransportPlan trial = bijection_plan(perm, cell_mass);
          const double v = spend(trial, best);
          if (v < current) {
            current = v;
            improved = true;
            break;
          }
          std::swap(perm[a], perm[b]);
        }
      }
    }
    descend(basis_from_bijection(perm, cell_mass, zero_tol_), current, rng, best);
  }

  void from_northwest(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols,
                      Rng* rng, Candidate& best) {
    budget_ = options_.max_evaluations;
    BasisState basis = northwest_corner(X_, Y_, rows, cols, zero_tol_);
    const double current = spend(basis.plan(), best);
    descend(std::move(basis), current, rng, best);
  }

 private:
  double spend(const TransportPlan& plan, Candidate& best) {
    if (budget_ > 0) --budget_;
    const BoundReport r = eval_.evaluate(plan);
    eval_.offer(plan, r, best);
    return r.upper;
  }

  // First-improvement pivot descent. Candidate entering cells are scanned
  // in a fixed or shuffled order.
  void descend(BasisState basis, double current, Rng* rng, Candidate& best) {
    const std::size_t nx = X_.size();
    const std::size_t ny = Y_.size();
    std::vector<std::pair<std::size_t, std::size_t>> order;
    for (std::size_t r = 0; r < nx; ++r) {
      for (std::size_t c = 0; c < ny; ++c) order.push_back({r, c});
    }
    bool improved = true;
    while (improved && budget_ > 0) {
      improved = false;
      if (rng != nullptr) std::shuffle(order.begin(), order.end(), *rng);
      for (const auto& [r, c] : order) {
        if (budget_ == 0) break;
        if (basis.is_basic(r, c)) continue;
        auto next = basis.pivot(r, c);
        if (!next) continue;
        const double v = spend(next->plan(), best);
        if (v < current) {
          current = v;
          basis = std::move(*next);
          improved = true;
          break;
        }
      }
    }
  }

  const FiniteMMSpace& X_;
  const FiniteMMSpace& Y_;
  PlanEvaluator& eval_;
  const PlanSearchOptions& options_;
  double zero_tol_;
  std::size_t budget_ = 0;
};

std::vector<std::size_t> identity(std::size_t n) {
  std::vector<std::size_t> v(n);
  std::iota(v.begin(), v.end(), 0);
  return v;
}

}  // namespace

void validate_plan(const TransportPlan& plan, std::span<const double> source_weights,
                   std::span<const double> target_weights, double tol) {
  std::vector<double> rows(source_weights.size(), 0.0);
  std::vector<double> cols(target_weights.size(), 0.0);
  for (const auto& c : plan.cells) {
    if (c.source >= rows.size() || c.target >= cols.size()) {
      throw PreconditionError("transport plan cell index out of range");
    }
    if (!(c.mass > 0.0) || !std::isfinite(c.mass)) {
      throw PreconditionError("transport plan cell masses must be positive");
    }
    rows[c.source] += c.mass;
    cols[c.target] += c.mass;
  }
  const double total = std::accumulate(source_weights.begin(), source_weights.end(), 0.0);
  const double t = scaled_tol(tol, total);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (std::abs(rows[i] - source_weights[i]) > t) {
      throw PreconditionError("transport plan row " + std::to_string(i) +
                              " does not match the source weight");
    }
  }
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (std::abs(cols[j] - target_weights[j]) > t) {
      throw PreconditionError("transport plan column " + std::to_string(j) +
                              " does not match the target weight");
    }
  }
}

SemiMetricPair plan_pair(const FiniteMMSpace& X, const FiniteMMSpace& Y, const TransportPlan& plan) {
  const std::size_t n = plan.cells.size();
  if (n == 0) throw PreconditionError("transport plan has no cells");
  std::vector<double> weights(n);
  DistanceMatrix d1(n);
  DistanceMatrix d2(n);
  for (std::size_t a = 0; a < n; ++a) {
    const auto& ca = plan.cells[a];
    weights[a] = ca.mass;
    for (std::size_t b = 0; b < n; ++b) {
      const auto& cb = plan.cells[b];
      d1(a, b) = X.distance(ca.source, cb.source);
      d2(a, b) = Y.distance(ca.target, cb.target);
    }
  }
  return SemiMetricPair(std::move(weights), std::move(d1), std::move(d2));
}

nlohmann::json plan_to_json(const TransportPlan& plan) {
  nlohmann::json cells = nlohmann::json::array();
  for (const auto& c : plan.cells) cells.push_back({c.source, c.target, c.mass});
  return cells;
}

NormalizedPair normalize_masses(const FiniteMMSpace& X, const FiniteMMSpace& Y) {
  const double m = X.total_mass();
  const double mp = Y.total_mass();
  if (!(m > 0.0) || !(mp > 0.0)) throw DomainError("normalize_masses: zero total mass");
  if (m > mp) throw PreconditionError("normalize_masses: requires m(X) <= m(Y); swap the inputs");
  if (m == mp) return {X, Y, 0.0};
  return {X, Y.with_scaled_mass(m / mp), mp - m};
}

BoundReport box_upper_plan_search(const FiniteMMSpace& X, const FiniteMMSpace& Y, double lambda,
                                  PlanSearch search, const PlanSearchOptions& options) {
  const double mx = X.total_mass();
  if (std::abs(mx - Y.total_mass()) > scaled_tol(kPlanTolerance, mx)) {
    throw PreconditionError("plan search needs equal total masses; normalize first");
  }
  PlanEvaluator eval(X, Y, lambda, options.heuristic);
  Candidate best;
  const bool bijective = bijection_eligible(X, Y);

  switch (search) {
    case PlanSearch::exact:
      best = exact_search(X, Y, eval, options);
      break;
    case PlanSearch::local: {
      LocalSearch local(X, Y, eval, options);
      if (bijective) {
        local.from_bijection(identity(X.size()), nullptr, best);
      } else {
        local.from_northwest(identity(X.size()), identity(Y.size()), nullptr, best);
      }
      break;
    }
    case PlanSearch::seeded_restart: {
      if (bijective && X.size() <= kExactPlanAtoms) {
        PlanSearchOptions bij = options;
        bij.refinement = 1;
        best = exact_search(X, Y, eval, bij);
      }
      LocalSearch local(X, Y, eval, options);
      for (std::size_t r = 0; r < options.restarts; ++r) {
        Rng rng = make_rng(options.seed, r);
        std::vector<std::size_t> rows = identity(X.size());
        std::vector<std::size_t> cols = identity(Y.size());
        std::shuffle(cols.begin(), cols.end(), rng);
        if (bijective) {
          local.from_bijection(cols, &rng, best);
        } else {
          std::shuffle(rows.begin(), rows.end(), rng);
          local.from_northwest(rows, cols, &rng, best);
        }
      }
      if (best.upper == kInf) {
        LocalSearch fallback(X, Y, eval, options);
        fallback.from_northwest(identity(X.size()), identity(Y.size()), nullptr, best);
      }
      break;
    }
  }

  BoundReport report;
  report.lower = 0.0;
  report.upper = best.upper;
  report.retained = best.box.retained;
  report.methods = {"plan-search-" + search_name(search)};
  for (const auto& m : best.box.methods) report.methods.push_back(m);
  report.lower_witness = {{"kind", "trivial"}};
  report.upper_witness = {{"plan", plan_to_json(best.plan)},
                          {"retained_cells", best.box.retained},
                          {"box", best.box.upper_witness},
                          {"search", search_name(search)},
                          {"seed", options.seed},
                          {"restarts", options.restarts},
                          {"refinement", options.refinement},
                          {"evaluations", eval.evaluations()},
                          {"lambda", lambda}};
  return report;
}

BoundReport box_upper(const FiniteMMSpace& X, const FiniteMMSpace& Y, double lambda,
                      PlanSearch search, const PlanSearchOptions& options) {
  const bool swap = X.total_mass() > Y.total_mass();
  const NormalizedPair np = swap ? normalize_masses(Y, X) : normalize_masses(X, Y);
  BoundReport r = box_upper_plan_search(np.X, np.Y, lambda, search, options);
  r.shift(np.additive_term);
  r.upper_witness["additive_term"] = np.additive_term;
  r.upper_witness["swapped"] = swap;
  return r;
}

}  // namespace mmbox::boxdist
