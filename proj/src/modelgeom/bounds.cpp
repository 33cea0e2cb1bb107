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

#include "mmbox/modelgeom/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "mmbox/error.hpp"
#include "mmbox/modelgeom/model_space.hpp"

namespace mmbox::modelgeom {

namespace {

constexpr double kPi = std::numbers::pi;
const double kLogPi = std::log(kPi);
const double kLog2 = std::log(2.0);

// Increasing in c on (0, 1); the feasible set is {g <= 0}.
double hyouka_gap(double c, int power, double log_k) {
  return power * std::log(c) - std::log1p(-c) - log_k;
}

void require_positive(double v, const char* name) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw DomainError(std::string(name) + " must be a positive finite number");
  }
}

}  // namespace

double hyouka_log_constant(int m, int n, double kappa1, double a_N) {
  if (m < 1) throw DomainError("hyouka: m must be >= 1");
  if (n <= m) throw UnsupportedError("hyouka: requires n > m (put the larger dimension first)");
  require_positive(kappa1, "kappa1");
  require_positive(a_N, "a_N");
  return std::log(static_cast<double>(n)) + std::log(a_N) + 0.5 * m * std::log(kappa1) +
         std::lgamma(0.5 * (m + 1)) + std::lgamma(0.5 * n) - std::log(static_cast<double>(m)) -
         (n + 1) * kLog2 - (m - 1) * kLogPi - std::lgamma(0.5 * m) - std::lgamma(0.5 * (n + 1));
}

HyoukaSolution hyouka_max_c(int m, int n, double kappa1, double a_N, double tol) {
  require_positive(tol, "tol");
  HyoukaSolution s;
  s.log_constant = hyouka_log_constant(m, n, kappa1, a_N);
  s.cap = std::min(1.0, kPi / std::sqrt(kappa1));
  const int power = n - m;

  if (s.cap < 1.0 && hyouka_gap(s.cap, power, s.log_constant) <= 0.0) {
    s.c = s.cap;
  } else {
    double lo = 0.0;
    double hi = s.cap;
    while (hi - lo > tol) {
      const double mid = 0.5 * (lo + hi);
      if (hyouka_gap(mid, power, s.log_constant) <= 0.0) {
        lo = mid;
      } else {
        hi = mid;
      }
      ++s.iterations;
    }
    s.c = lo;
  }
  s.log_margin = s.c > 0.0 ? -hyouka_gap(s.c, power, s.log_constant)
                           : std::numeric_limits<double>::infinity();
  s.slack = (1.0 - s.c) * std::exp(s.log_constant) - std::pow(s.c, power);
  return s;
}

double kaotan_constant(double C1, double C2, double C3) {
  require_positive(C1, "C1");
  require_positive(C2, "C2");
  require_positive(C3, "C3");
  const double a = std::exp(-(C1 / C3) * kLog2 - (C2 / C3) * kLogPi);
  const double b = std::exp(-(C2 / C3) * kLog2 - (C1 / C3) * kLogPi);
  return std::min(a, b);
}

KaotanThreshold kaotan_finite_k(int n_k, int m_k, double C1, double C2, double C3, int k,
                                KaotanFamily family, std::optional<double> c_probe) {
  require_positive(C1, "C1");
  require_positive(C2, "C2");
  require_positive(C3, "C3");
  if (k < 1) throw DomainError("kaotan_finite_k: k must be >= 1");
  if (m_k < 1 || n_k <= m_k) throw PreconditionError("kaotan_finite_k: requires n_k > m_k >= 1");
  const double kk = k;
  if (n_k > C1 * kk) throw PreconditionError("kaotan_finite_k: hypothesis n_k <= C1 k fails");
  if (m_k > C2 * kk) throw PreconditionError("kaotan_finite_k: hypothesis m_k <= C2 k fails");
  if (n_k - m_k < C3 * kk) {
    throw PreconditionError("kaotan_finite_k: hypothesis n_k - m_k >= C3 k fails");
  }

  auto threshold = [&](double c) {
    if (family == KaotanFamily::sphere) {
      const double log_bracket = std::log1p(-c) + std::log(static_cast<double>(n_k)) +
                                 std::lgamma(0.5 * n_k) - std::log(static_cast<double>(m_k)) -
                                 std::lgamma(0.5 * (n_k + 1));
      const double e = 1.0 / (C3 * kk);
      return std::exp(e * log_bracket - (C1 / C3) * kLog2 + (-(C2 / C3) + e) * kLogPi);
    }
    const double e = 1.0 / (2.0 * C3 * kk);
    const double log_bracket = std::log1p(-c) - std::log(2.0 * std::sqrt(kPi) * C2 * kk);
    return std::exp(e * log_bracket - (C1 / C3 + e) * kLog2 + (-(C2 / C3) + e) * kLogPi);
  };

  KaotanThreshold out;
  if (c_probe) {
    const double c = *c_probe;
    if (!(c > 0.0 && c < 1.0)) throw DomainError("kaotan_finite_k: probe must lie in (0, 1)");
    out.c = c;
    out.threshold = threshold(c);
    if (c > out.threshold) {
      throw PreconditionError("kaotan_finite_k: probe " + std::to_string(c) +
                              " exceeds the admissible threshold " +
                              std::to_string(out.threshold));
    }
    return out;
  }
  // c - threshold(c) is increasing; bisect for the crossing.
  double lo = 0.0;
  double hi = 1.0;
  while (hi - lo > 1e-14) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= threshold(mid)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  out.c = lo;
  out.threshold = threshold(lo);
  return out;
}

double oosawa_constant(double C1, double C2, double C3) {
  require_positive(C1, "C1");
  require_positive(C2, "C2");
  if (!(C3 >= 0.0)) throw DomainError("C3 must be nonnegative");
  return std::min(0.5, C3 / (std::sqrt(C1) + std::sqrt(C2)));
}

double oosawa_finite_k(int n_k, int m_k) {
  if (m_k < 1 || n_k <= m_k) throw PreconditionError("oosawa_finite_k: requires n_k > m_k >= 1");
  return 2.0 * (n_k - m_k - 1) / (std::sqrt(n_k - 1.0) + std::sqrt(static_cast<double>(m_k)));
}

double asobisugi_bound(int n, int m) {
  return std::min(0.5, std::abs(so_diameter(n) - so_diameter(m)));
}

}  // namespace mmbox::modelgeom
