//
// qeclab - quadratic embedding constants of graphs
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace qeclab {

// Dense row-major real matrix.
class Matrix {
public:
  Matrix() = default;
  Matrix(int rows, int cols, double fill = 0.0);

  static Matrix identity(int n);

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }

  double &operator()(int i, int j) noexcept {
    return data_[static_cast<std::size_t>(i) * cols_ + j];
  }
  double operator()(int i, int j) const noexcept {
    return data_[static_cast<std::size_t>(i) * cols_ + j];
  }

  std::span<const double> data() const noexcept { return data_; }
  std::span<double> data() noexcept { return data_; }

  double frobenius_norm() const noexcept;
  double max_abs() const noexcept;
  Matrix transposed() const;

  bool operator==(const Matrix &) const = default;

private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<double> data_;
};

Matrix operator*(const Matrix &a, const Matrix &b);
std::vector<double> operator*(const Matrix &a, std::span<const double> x);

// Exact-integer dense matrix, used where entries are combinatorial counts.
class IntMatrix {
public:
  IntMatrix() = default;
  IntMatrix(int n, long long fill = 0)
      : n_(n), data_(static_cast<std::size_t>(n) * n, fill) {}

  int size() const noexcept { return n_; }
  long long &operator()(int i, int j) noexcept {
    return data_[static_cast<std::size_t>(i) * n_ + j];
  }
  long long operator()(int i, int j) const noexcept {
    return data_[static_cast<std::size_t>(i) * n_ + j];
  }
  Matrix to_real() const;

  bool operator==(const IntMatrix &) const = default;

private:
  int n_ = 0;
  std::vector<long long> data_;
};

} // namespace qeclab
