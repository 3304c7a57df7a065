//
// qeclab - quadratic embedding constants of graphs
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <optional>

#include "qeclab/graph.hpp"

namespace qeclab {

// c3·λ³ + c2·λ² + c1·λ + c0
struct CubicCoefficients {
  double c3 = 0.0, c2 = 0.0, c1 = 0.0, c0 = 0.0;

  double operator()(double x) const noexcept {
    return ((c3 * x + c2) * x + c1) * x + c0;
  }
  double derivative(double x) const noexcept {
    return (3.0 * c3 * x + 2.0 * c2) * x + c1;
  }
};

// Largest real root. Scans [-B, B] (B the Cauchy bound) from the top,
// visiting the real critical points as well, so tangent roots are found too;
// the first sign change is bisected to tol and refined by one Newton step
// that is kept only if it stays inside the bracket.
double max_real_root_cubic(const CubicCoefficients &c, double tol = 1e-13);

// (m+n)λ³ + (2t-mn)λ² + (2t-m-n)λ + (m-t)(n-t)
CubicCoefficients almost_complete_bipartite_polynomial(int t, int m, int n);

// QEC(K_{m,n}) = (2(m-1)(n-1) - 2) / (m+n).
double qec_complete_bipartite(int m, int n);

// QEC(K_{m,n}^t) for 0 <= t <= m <= n. Routes t = 0 to the complete
// bipartite formula, (3,3,3) to 0 and (2,2,n) to qec_k2n2; every other
// connected case is 2λ₀ - 2 with λ₀ the largest root of the cubic above.
// Disconnected members (1,1,n) and (2,2,2) throw InvalidArgument.
double qec_almost_complete_bipartite(int t, int m, int n, double tol = 1e-13);

// QEC(K_{2,n}^2) = (n - 8 + sqrt(5n² - 24n + 32)) / (n + 2), n >= 3.
double qec_k2n2(int n);

// QEC(K_{m,m}^t) = (m - 6 + sqrt(m² + 4m + 4 - 8t)) / 2 for 1 <= t <= m,
// m >= 2, excluding (2,2) (disconnected) and (3,3) (C_6, where the formula
// does not hold).
double qec_corollary_kmm(int t, int m);

// QEC(K_{m,n}^m) = (mn - 4m - 2n + sqrt(m²n² + 4n² - 4m²n)) / (m+n),
// 3 <= m <= n, n >= 4.
double qec_corollary_kmnm(int m, int n);

// QEC(P_n) = -1 / (1 + cos(π/n)), n >= 2.
double qec_path(int n);

// Closed form for a family-tagged graph when one is known (path, kmn, acb,
// crown); nullopt otherwise or outside the formulas' hypotheses.
std::optional<double> qec_closed_form(const FamilyTag &tag);

} // namespace qeclab
