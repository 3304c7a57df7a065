//
// qeclab - quadratic embedding constants of graphs
// SPDX-License-Identifier: Apache-2.0
//

#include "qeclab/matrix.hpp"

#include <cmath>

#include "qeclab/errors.hpp"

namespace qeclab {

Matrix::Matrix(int rows, int cols, double fill)
    : rows_(rows), cols_(cols),
      data_(static_cast<std::size_t>(rows) * cols, fill) {
  if (rows < 0 || cols < 0)
    throw InvalidArgument("matrix dimensions must be nonnegative");
}

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i)
    m(i, i) = 1.0;
  return m;
}

double Matrix::frobenius_norm() const noexcept {
  double s = 0.0;
  for (double x : data_)
    s += x * x;
  return std::sqrt(s);
}

double Matrix::max_abs() const noexcept {
  double s = 0.0;
  for (double x : data_)
    s = std::max(s, std::abs(x));
  return s;
}

Matrix Matrix::transposed() const {
  Matrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      t(j, i) = (*this)(i, j);
  return t;
}

Matrix operator*(const Matrix &a, const Matrix &b) {
  if (a.cols() != b.rows())
    throw InvalidArgument("matrix product dimension mismatch");
  Matrix c(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      const double aik = a(i, k);
      if (aik == 0.0)
        continue;
      for (int j = 0; j < b.cols(); ++j)
        c(i, j) += aik * b(k, j);
    }
  return c;
}

std::vector<double> operator*(const Matrix &a, std::span<const double> x) {
  if (static_cast<std::size_t>(a.cols()) != x.size())
    throw InvalidArgument("matrix-vector dimension mismatch");
  std::vector<double> y(a.rows(), 0.0);
  for (int i = 0; i < a.rows(); ++i) {
    double s = 0.0;
    for (int j = 0; j < a.cols(); ++j)
      s += a(i, j) * x[j];
    y[i] = s;
  }
  return y;
}

Matrix IntMatrix::to_real() const {
  Matrix m(n_, n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      m(i, j) = static_cast<double>((*this)(i, j));
  return m;
}

} // namespace qeclab
