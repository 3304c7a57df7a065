//
// qeclab - quadratic embedding constants of graphs
// SPDX-License-Identifier: Apache-2.0
//

#include "qeclab/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "qeclab/errors.hpp"

namespace qeclab {
namespace {

constexpr int kMaxSweeps = 100;
constexpr double kOffDiagonalRatio = 1e-12;

void check_symmetric(const Matrix &m, double tol) {
  if (m.rows() != m.cols())
    throw NumericError("eigensolver needs a square matrix");
  for (double x : m.data())
    if (!std::isfinite(x))
      throw NumericError("matrix has non-finite entries");
  const double bound = tol * std::max(1.0, m.max_abs());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = i + 1; j < m.cols(); ++j)
      if (std::abs(m(i, j) - m(j, i)) > bound)
        throw NumericError("matrix is not symmetric");
}

double off_diagonal_norm(const Matrix &a) {
  double s = 0.0;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (i != j)
        s += a(i, j) * a(i, j);
  return std::sqrt(s);
}

} // namespace

SymmetricEigen symmetric_eigen(const Matrix &m, double tol) {
  check_symmetric(m, tol);
  const int n = m.rows();

  // Work on the symmetrized copy so round-off asymmetry cannot bias results.
  Matrix a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      a(i, j) = 0.5 * (m(i, j) + m(j, i));
  Matrix v = Matrix::identity(n);

  const double threshold = kOffDiagonalRatio * a.frobenius_norm();
  int sweep = 0;
  while (off_diagonal_norm(a) > threshold) {
    if (++sweep > kMaxSweeps)
      throw NumericError("Jacobi iteration did not converge in 100 sweeps");
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0)
          continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        for (int k = 0; k < n; ++k) {
          const double akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          const double apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        for (int k = 0; k < n; ++k) {
          const double vkp = v(k, p), vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int i, int j) { return a(i, i) < a(j, j); });

  SymmetricEigen out;
  out.values.resize(n);
  out.vectors = Matrix(n, n);
  for (int c = 0; c < n; ++c) {
    const int src = order[c];
    out.values[c] = a(src, src);
    int lead = 0;
    for (int k = 1; k < n; ++k)
      if (std::abs(v(k, src)) > std::abs(v(lead, src)) + 1e-12)
        lead = k;
    const double sign = v(lead, src) < 0.0 ? -1.0 : 1.0;
    for (int k = 0; k < n; ++k)
      out.vectors(k, c) = sign * v(k, src);
  }
  return out;
}

namespace {

EigenPair column(const SymmetricEigen &e, int c) {
  EigenPair p;
  p.value = e.values[c];
  p.vector.resize(e.vectors.rows());
  for (int k = 0; k < e.vectors.rows(); ++k)
    p.vector[k] = e.vectors(k, c);
  return p;
}

} // namespace

EigenPair max_eigenvalue_symmetric(const Matrix &m, double tol) {
  if (m.rows() == 0)
    throw InvalidArgument("empty matrix has no eigenvalues");
  const auto e = symmetric_eigen(m, tol);
  return column(e, m.rows() - 1);
}

EigenPair min_eigenvalue_symmetric(const Matrix &m, double tol) {
  if (m.rows() == 0)
    throw InvalidArgument("empty matrix has no eigenvalues");
  const auto e = symmetric_eigen(m, tol);
  return column(e, 0);
}

std::string to_string(QecMethod method) {
  return method == QecMethod::kNumeric ? "numeric" : "closed-form";
}

Matrix to_matrix(const DistanceMatrix &d) {
  Matrix m(d.size(), d.size());
  for (int i = 0; i < d.size(); ++i)
    for (int j = 0; j < d.size(); ++j)
      m(i, j) = d(i, j);
  return m;
}

Matrix centered_basis(int n) {
  if (n < 2)
    throw InvalidArgument("centered basis needs n >= 2");
  Matrix b(n, n - 1);
  for (int k = 1; k < n; ++k) {
    const double scale = 1.0 / std::sqrt(static_cast<double>(k) * (k + 1));
    for (int i = 0; i < k; ++i)
      b(i, k - 1) = scale;
    b(k, k - 1) = -k * scale;
  }
  return b;
}

QecResult qec_numeric(const DistanceMatrix &d, double tol) {
  const int n = d.size();
  if (n < 2)
    throw InvalidArgument("QEC needs at least two vertices");
  const Matrix b = centered_basis(n);
  const Matrix bt = b.transposed();
  Matrix reduced = bt * (to_matrix(d) * b);
  // B^T D B is symmetric in exact arithmetic; remove round-off skew.
  for (int i = 0; i < n - 1; ++i)
    for (int j = i + 1; j < n - 1; ++j) {
      const double avg = 0.5 * (reduced(i, j) + reduced(j, i));
      reduced(i, j) = reduced(j, i) = avg;
    }
  const EigenPair top = max_eigenvalue_symmetric(reduced, tol);

  QecResult r;
  r.value = top.value;
  r.vector = b * std::span<const double>(top.vector);
  r.tol = tol;
  r.method = QecMethod::kNumeric;
  return r;
}

QecResult qec_numeric(const Graph &g, double tol) {
  return qec_numeric(distance_matrix(g), tol);
}

double quadratic_form(const DistanceMatrix &d, std::span<const double> f) {
  if (f.size() != static_cast<std::size_t>(d.size()))
    throw InvalidArgument("quadratic form: vector length does not match D");
  double s = 0.0;
  for (int i = 0; i < d.size(); ++i)
    for (int j = 0; j < d.size(); ++j)
      s += f[i] * f[j] * d(i, j);
  return s;
}

long long quadratic_form(const DistanceMatrix &d,
                         std::span<const long long> f) {
  if (f.size() != static_cast<std::size_t>(d.size()))
    throw InvalidArgument("quadratic form: vector length does not match D");
  long long s = 0;
  for (int i = 0; i < d.size(); ++i) {
    if (f[i] == 0)
      continue;
    for (int j = 0; j < d.size(); ++j)
      s += f[i] * f[j] * d(i, j);
  }
  return s;
}

Matrix q_power_matrix(const DistanceMatrix &d, double q) {
  const int n = d.size();
  Matrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      m(i, j) = i == j ? 1.0 : std::pow(q, d(i, j));
  return m;
}

PsdResult is_psd(const Matrix &m, double tol) {
  const auto e = symmetric_eigen(m, tol);
  PsdResult r;
  r.min_eigenvalue = e.values.empty() ? 0.0 : e.values.front();
  r.psd = r.min_eigenvalue >= -tol;
  return r;
}

PiScan pi_scan(const DistanceMatrix &d, int grid_points, double tol) {
  if (grid_points <= 0)
    throw InvalidArgument("pi scan needs a positive grid resolution");

  std::vector<double> grid{-1.0, 0.0, 1.0};
  if (grid_points >= 2)
    for (int i = 0; i < grid_points; ++i)
      grid.push_back(-1.0 + 2.0 * i / (grid_points - 1));
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end(),
                         [](double a, double b) {
                           return std::abs(a - b) < 1e-15;
                         }),
             grid.end());
  // Snap the near-zero survivor to exactly 0 so the 0^0 convention applies.
  for (double &q : grid)
    if (std::abs(q) < 1e-15)
      q = 0.0;

  PiScan scan;
  scan.grid = grid;
  scan.full_interval_sampled = true;
  for (double q : grid) {
    const PsdResult r = is_psd(q_power_matrix(d, q), tol);
    scan.psd_flags.push_back(r.psd);
    scan.min_eigenvalues.push_back(r.min_eigenvalue);
    scan.full_interval_sampled = scan.full_interval_sampled && r.psd;
  }
  return scan;
}

} // namespace qeclab
