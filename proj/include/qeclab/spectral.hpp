//
// qeclab - quadratic embedding constants of graphs
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <span>
#include <string>
#include <vector>

#include "qeclab/graph.hpp"
#include "qeclab/matrix.hpp"

namespace qeclab {

inline constexpr double kDefaultTol = 1e-9;
inline constexpr int kDefaultGridPoints = 401;

struct EigenPair {
  double value = 0.0;
  std::vector<double> vector;
};

// Full eigendecomposition; values ascending, vectors stored as columns.
struct SymmetricEigen {
  std::vector<double> values;
  Matrix vectors;
};

// Cyclic Jacobi. Converged when the off-diagonal Frobenius norm drops below
// 1e-12 * ||M||_F; more than 100 sweeps throws NumericError, as do
// non-finite entries and asymmetry beyond tol * max(1, max|M_ij|).
// Each eigenvector is normalized so its largest-magnitude entry (first one
// on ties) is positive, which makes the output deterministic.
SymmetricEigen symmetric_eigen(const Matrix &m, double tol = kDefaultTol);

EigenPair max_eigenvalue_symmetric(const Matrix &m, double tol = kDefaultTol);
EigenPair min_eigenvalue_symmetric(const Matrix &m, double tol = kDefaultTol);

enum class QecMethod { kNumeric, kClosedForm };
std::string to_string(QecMethod method);

struct QecResult {
  double value = 0.0;
  // Zero-sum unit vector attaining value; empty for closed-form results.
  std::vector<double> vector;
  double tol = kDefaultTol;
  QecMethod method = QecMethod::kNumeric;
};

Matrix to_matrix(const DistanceMatrix &d);

// Helmert basis of {f : sum f = 0}: column k-1 (k = 1..n-1) is
// (1,...,1,-k,0,...,0) / sqrt(k(k+1)) with k leading ones.
Matrix centered_basis(int n);

// max f^T D f over unit f with sum f = 0, as the top eigenpair of B^T D B
// for the Helmert basis B. Requires n >= 2.
QecResult qec_numeric(const DistanceMatrix &d, double tol = kDefaultTol);
QecResult qec_numeric(const Graph &g, double tol = kDefaultTol);

double quadratic_form(const DistanceMatrix &d, std::span<const double> f);
// Exact integer evaluation.
long long quadratic_form(const DistanceMatrix &d, std::span<const long long> f);

// Entrywise q^{d(i,j)} with the 0^0 = 1 convention on the diagonal.
Matrix q_power_matrix(const DistanceMatrix &d, double q);

struct PsdResult {
  bool psd = false;
  double min_eigenvalue = 0.0;
};

// psd iff the smallest eigenvalue is >= -tol.
PsdResult is_psd(const Matrix &m, double tol = kDefaultTol);

// Sampled approximation of {q in [-1,1] : q^D is PSD}.
struct PiScan {
  std::vector<double> grid;
  std::vector<bool> psd_flags;
  std::vector<double> min_eigenvalues;
  bool full_interval_sampled = false;
};

// grid_points uniformly spaced points over [-1,1], plus -1, 0 and 1 when
// missing. Throws InvalidArgument for grid_points <= 0.
PiScan pi_scan(const DistanceMatrix &d, int grid_points = kDefaultGridPoints,
               double tol = kDefaultTol);

} // namespace qeclab
