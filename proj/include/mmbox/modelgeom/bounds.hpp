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

#include <optional>

namespace mmbox::modelgeom {

/// log K where K is the right-hand constant of the volume-comparison
/// inequality c^{n-m} <= (1 - c) K for an m-manifold M with
/// Ric >= (m - 1) kappa1 and an n-manifold N with vol(N) = a_N vol(S^n):
///
///   K = n a_N kappa1^{m/2} Gamma((m+1)/2) Gamma(n/2)
///       / (m 2^{n+1} pi^{m-1} Gamma(m/2) Gamma((n+1)/2)).
double hyouka_log_constant(int m, int n, double kappa1, double a_N);

struct HyoukaSolution {
  double c = 0.0;             // certified lower bound on the box distance
  double log_constant = 0.0;  // log K
  double slack = 0.0;         // (1 - c) K - c^{n-m}
  double log_margin = 0.0;    // log((1 - c) K) - (n - m) log c
  double cap = 0.0;           // min(1, pi / sqrt(kappa1))
  int iterations = 0;
};

/// Largest c in (0, min(1, pi/sqrt(kappa1))] with c^{n-m} <= (1 - c) K,
/// found by bisection to `tol`; the returned c is always on the feasible
/// side. Requires n > m >= 1.
HyoukaSolution hyouka_max_c(int m, int n, double kappa1, double a_N, double tol = 1e-9);

/// min{2^{-C1/C3} pi^{-C2/C3}, 2^{-C2/C3} pi^{-C1/C3}}.
double kaotan_constant(double C1, double C2, double C3);

enum class KaotanFamily { sphere, cp };

struct KaotanThreshold {
  double threshold = 0.0;  // right-hand side evaluated at c
  double c = 0.0;          // probe, or the self-consistent c = threshold(c)
};

/// Finite-k threshold behind the asymptotic constant. For the sphere
/// family (n = n_k, m = m_k)
///
///   {(1-c) n Gamma(n/2) / (m Gamma((n+1)/2))}^{1/(C3 k)}
///       2^{-C1/C3} pi^{-C2/C3 + 1/(C3 k)},
///
/// and for CP
///
///   {(1-c) / (2 sqrt(pi) C2 k)}^{1/(2 C3 k)}
///       2^{-C1/C3 - 1/(2 C3 k)} pi^{-C2/C3 + 1/(2 C3 k)}.
///
/// With a probe the threshold is evaluated at it and a probe above the
/// threshold is rejected (PreconditionError). Without one, returns the
/// fixed point c = threshold(c). The growth hypotheses n_k <= C1 k,
/// m_k <= C2 k, n_k - m_k >= C3 k are checked.
KaotanThreshold kaotan_finite_k(int n_k, int m_k, double C1, double C2, double C3, int k,
                                KaotanFamily family, std::optional<double> c_probe = std::nullopt);

/// min{1/2, C3 / (sqrt(C1) + sqrt(C2))}.
double oosawa_constant(double C1, double C2, double C3);

/// 2 (n_k - m_k - 1) / (sqrt(n_k - 1) + sqrt(m_k)), the diameter-gap lower
/// estimate for SO(n_k) vs SO(m_k) with n_k > m_k.
double oosawa_finite_k(int n_k, int m_k);

/// min{1/2, |diam SO(n) - diam SO(m)|}.
double asobisugi_bound(int n, int m);

}  // namespace mmbox::modelgeom
