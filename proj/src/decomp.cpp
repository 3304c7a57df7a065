//
// qeclab - quadratic embedding constants of graphs
// SPDX-License-Identifier: Apache-2.0
//

#include "qeclab/decomp.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "qeclab/errors.hpp"

namespace qeclab {

BlockJ::BlockJ(int n_, int p_, int q_) : n(n_), p(p_), q(q_) {
  if (!(1 <= p && p <= q && q <= n))
    throw InvalidArgument("J^n(p,q) needs 1 <= p <= q <= n (got n=" +
                          std::to_string(n) + ", p=" + std::to_string(p) +
                          ", q=" + std::to_string(q) + ")");
}

IntMatrix BlockJ::to_matrix() const {
  IntMatrix m(n);
  add_block(m, *this);
  return m;
}

void add_block(IntMatrix &m, const BlockJ &j, long long coeff) {
  if (m.size() != j.n)
    throw InvalidArgument("block dimension mismatch");
  for (int i = j.p; i <= j.q; ++i)
    for (int k = j.p; k <= j.q; ++k)
      m(i - 1, k - 1) += coeff;
}

namespace {

void require_n(int n) {
  if (n < 3)
    throw InvalidArgument("A_n / B_n need n >= 3");
}

} // namespace

IntMatrix build_A(int n) {
  require_n(n);
  IntMatrix a(n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      const int diff = std::abs(i - j);
      a(i - 1, j - 1) = std::min(i, n + 1 - i) + std::min(j, n + 1 - j) -
                        std::min(diff, n - diff);
    }
  return a;
}

IntMatrix build_B(int n) {
  require_n(n);
  IntMatrix b(n);
  const int k = n / 2;
  add_block(b, BlockJ(n, 1, n));
  if (n % 2 == 0) {
    add_block(b, BlockJ(n, 1, k));
    add_block(b, BlockJ(n, k + 1, 2 * k));
    for (int p = 2; p <= k; ++p)
      add_block(b, BlockJ(n, p, p + k - 1), 2);
  } else {
    for (int p = 1; p <= k + 1; ++p)
      add_block(b, BlockJ(n, p, p + k));
    for (int p = 2; p <= k + 1; ++p)
      add_block(b, BlockJ(n, p, p + k - 1));
  }
  return b;
}

Theta12Record verify_theta12(int n, double tol) {
  const IntMatrix a = build_A(n);
  Theta12Record rec;
  rec.equal = a == build_B(n);
  rec.min_eig = min_eigenvalue_symmetric(a.to_real(), tol).value;
  rec.psd = rec.min_eig >= -tol;
  return rec;
}

} // namespace qeclab
