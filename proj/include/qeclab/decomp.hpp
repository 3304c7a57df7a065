//
// qeclab - quadratic embedding constants of graphs
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include "qeclab/matrix.hpp"
#include "qeclab/spectral.hpp"

namespace qeclab {

// Matrices here are n x n with the 1-based entry (i,j) stored at (i-1, j-1).

// J^n(p,q): ones on the square band p <= i,j <= q, zeros elsewhere.
struct BlockJ {
  int n = 0, p = 1, q = 1;

  BlockJ(int n, int p, int q); // throws unless 1 <= p <= q <= n
  long long at(int i, int j) const noexcept {
    return p <= i && i <= q && p <= j && j <= q ? 1 : 0;
  }
  IntMatrix to_matrix() const;
};

// Adds coeff * J into m.
void add_block(IntMatrix &m, const BlockJ &j, long long coeff = 1);

// a_ij = min{i, n+1-i} + min{j, n+1-j} - min{|i-j|, n-|i-j|}, n >= 3.
IntMatrix build_A(int n);

// Sum of J-blocks, n >= 3:
//   n = 2k:   J(1,2k) + J(1,k) + J(k+1,2k) + 2 sum_{p=2..k} J(p,p+k-1)
//   n = 2k+1: J(1,2k+1) + sum_{p=1..k+1} J(p,p+k) + sum_{p=2..k+1} J(p,p+k-1)
IntMatrix build_B(int n);

struct Theta12Record {
  bool equal = false;
  double min_eig = 0.0;
  bool psd = false; // min_eig >= -tol
};

Theta12Record verify_theta12(int n, double tol = kDefaultTol);

} // namespace qeclab
