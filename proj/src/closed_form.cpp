//
// qeclab - quadratic embedding constants of graphs
// SPDX-License-Identifier: Apache-2.0
//

#include "qeclab/closed_form.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "qeclab/errors.hpp"

namespace qeclab {
namespace {

constexpr int kScanIntervals = 4096;

// |P(x)| below this counts as zero at a critical point (tangent root).
double zero_band(const CubicCoefficients &c, double x) {
  const double ax = std::abs(x);
  const double scale = ((std::abs(c.c3) * ax + std::abs(c.c2)) * ax +
                        std::abs(c.c1)) * ax + std::abs(c.c0);
  return 64.0 * std::numeric_limits<double>::epsilon() * scale;
}

int sign_of(double v) { return (v > 0.0) - (v < 0.0); }

struct ScanPoint {
  double x;
  bool critical;
};

} // namespace

double max_real_root_cubic(const CubicCoefficients &c, double tol) {
  if (!std::isfinite(c.c3) || !std::isfinite(c.c2) || !std::isfinite(c.c1) ||
      !std::isfinite(c.c0))
    throw InvalidArgument("cubic coefficients must be finite");
  if (c.c3 == 0.0)
    throw InvalidArgument("leading coefficient of a cubic must be nonzero");

  const double bound =
      1.0 + std::max({std::abs(c.c2 / c.c3), std::abs(c.c1 / c.c3),
                      std::abs(c.c0 / c.c3)});

  std::vector<ScanPoint> points;
  points.reserve(kScanIntervals + 3);
  for (int i = 0; i <= kScanIntervals; ++i)
    points.push_back({-bound + 2.0 * bound * i / kScanIntervals, false});
  // Critical points: 3c3 x² + 2c2 x + c1 = 0.
  const double qa = 3.0 * c.c3, qb = 2.0 * c.c2, qc = c.c1;
  const double disc = qb * qb - 4.0 * qa * qc;
  if (disc >= 0.0) {
    const double r = std::sqrt(disc);
    for (double x : {(-qb - r) / (2.0 * qa), (-qb + r) / (2.0 * qa)})
      if (x > -bound && x < bound)
        points.push_back({x, true});
  }
  std::sort(points.begin(), points.end(),
            [](const ScanPoint &a, const ScanPoint &b) { return a.x < b.x; });

  int upper_sign = sign_of(c(points.back().x));
  for (std::size_t i = points.size(); i-- > 0;) {
    const double x = points[i].x;
    const double value = c(x);
    if (value == 0.0 ||
        (points[i].critical && std::abs(value) <= zero_band(c, x)))
      return x;
    const int s = sign_of(value);
    if (i + 1 == points.size() || s == upper_sign) {
      upper_sign = s;
      continue;
    }

    double lo = x, hi = points[i + 1].x;
    const int s_lo = s;
    while (hi - lo > tol) {
      const double mid = 0.5 * (lo + hi);
      const double v_mid = c(mid);
      if (v_mid == 0.0)
        return mid;
      (sign_of(v_mid) == s_lo ? lo : hi) = mid;
    }
    double root = 0.5 * (lo + hi);
    const double dp = c.derivative(root);
    if (dp != 0.0) {
      const double polished = root - c(root) / dp;
      if (polished >= lo && polished <= hi)
        root = polished;
    }
    return root;
  }
  // Unreachable for a genuine cubic: P(-B) and P(B) have opposite signs.
  throw InvalidArgument("no real root bracketed");
}

CubicCoefficients almost_complete_bipartite_polynomial(int t, int m, int n) {
  return CubicCoefficients{static_cast<double>(m + n),
                           static_cast<double>(2 * t - m * n),
                           static_cast<double>(2 * t - m - n),
                           static_cast<double>((m - t) * (n - t))};
}

double qec_complete_bipartite(int m, int n) {
  if (m < 1 || n < 1)
    throw InvalidArgument("K_{m,n} needs m, n >= 1");
  return (2.0 * (m - 1) * (n - 1) - 2.0) / (m + n);
}

double qec_almost_complete_bipartite(int t, int m, int n, double tol) {
  if (!(0 <= t && t <= m && m <= n && m >= 1))
    throw InvalidArgument("K_{m,n}^t needs 0 <= t <= m <= n, m >= 1");
  if (t == 0)
    return qec_complete_bipartite(m, n);
  if (t == 1 && m == 1)
    throw InvalidArgument("K_{1,n}^1 is disconnected");
  if (t == 2 && m == 2) {
    if (n == 2)
      throw InvalidArgument("K_{2,2}^2 is disconnected");
    return qec_k2n2(n);
  }
  if (t == 3 && m == 3 && n == 3)
    return 0.0;
  const double root =
      max_real_root_cubic(almost_complete_bipartite_polynomial(t, m, n), tol);
  return 2.0 * root - 2.0;
}

double qec_k2n2(int n) {
  if (n < 3)
    throw InvalidArgument("QEC(K_{2,n}^2) formula needs n >= 3");
  const double nn = n;
  return (nn - 8.0 + std::sqrt(5.0 * nn * nn - 24.0 * nn + 32.0)) / (nn + 2.0);
}

double qec_corollary_kmm(int t, int m) {
  if (m < 2 || t < 1 || t > m)
    throw InvalidArgument("QEC(K_{m,m}^t) formula needs 1 <= t <= m, m >= 2");
  if (t == 2 && m == 2)
    throw InvalidArgument("K_{2,2}^2 is disconnected");
  if (t == 3 && m == 3)
    throw InvalidArgument("QEC(K_{3,3}^3) = QEC(C_6) is not covered by the "
                          "K_{m,m}^t formula");
  const double mm = m;
  return (mm - 6.0 + std::sqrt(mm * mm + 4.0 * mm + 4.0 - 8.0 * t)) / 2.0;
}

double qec_corollary_kmnm(int m, int n) {
  if (m < 3 || m > n || n < 4)
    throw InvalidArgument("QEC(K_{m,n}^m) formula needs 3 <= m <= n, n >= 4");
  const double mm = m, nn = n;
  return (mm * nn - 4.0 * mm - 2.0 * nn +
          std::sqrt(mm * mm * nn * nn + 4.0 * nn * nn - 4.0 * mm * mm * nn)) /
         (mm + nn);
}

double qec_path(int n) {
  if (n < 2)
    throw InvalidArgument("QEC(P_n) needs n >= 2");
  return -1.0 / (1.0 + std::cos(std::numbers::pi / n));
}

std::optional<double> qec_closed_form(const FamilyTag &tag) {
  const auto &p = tag.params;
  try {
    if (tag.name == "path" && p.size() == 1)
      return qec_path(p[0]);
    if (tag.name == "kmn" && p.size() == 2)
      return qec_complete_bipartite(std::min(p[0], p[1]),
                                    std::max(p[0], p[1]));
    if (tag.name == "acb" && p.size() == 3)
      return qec_almost_complete_bipartite(p[0], std::min(p[1], p[2]),
                                           std::max(p[1], p[2]));
    if (tag.name == "crown" && p.size() == 1)
      return qec_almost_complete_bipartite(p[0], p[0], p[0]);
  } catch (const InvalidArgument &) {
  }
  return std::nullopt;
}

} // namespace qeclab
